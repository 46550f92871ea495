#include "pdeforge/pdeforge.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

#include "pdeforge/json_io.hpp"
#include "pdeforge/oracles.hpp"
#include "pdeforge/selftest.hpp"

using namespace pdeforge;

struct pdf_poly {
  MLPoly value;
};
struct pdf_circuit {
  SigmaPiSigma value;
};

namespace {

thread_local std::string g_last_error;

pdf_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleRing: return PDF_E_RING;
    case ErrorKind::SizeGuard: return PDF_E_GUARD;
    case ErrorKind::Precondition: return PDF_E_PRECONDITION;
    case ErrorKind::InvalidPde: return PDF_E_INVALID_PDE;
    case ErrorKind::Parse: return PDF_E_PARSE;
    case ErrorKind::NonConvergence: return PDF_E_NOCONV;
    case ErrorKind::Usage: return PDF_E_USAGE;
    case ErrorKind::Internal: return PDF_E_INTERNAL;
  }
  return PDF_E_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pdf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return PDF_E_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PDF_E_INTERNAL;
  }
}

IsoKind iso_kind_of(const char* kind) {
  std::string k = kind ? kind : "";
  if (k == "iso") return IsoKind::Iso;
  if (k == "sub") return IsoKind::Sub;
  if (k == "super") return IsoKind::Super;
  throw_error(ErrorKind::Usage, "kind must be iso|sub|super, got '" + k + "'");
}

CardinalityKind cardinality_kind_of(const char* kind) {
  std::string k = kind ? kind : "";
  if (k == "le") return CardinalityKind::LessEq;
  if (k == "ge") return CardinalityKind::GreaterEq;
  if (k == "eq") return CardinalityKind::Equal;
  throw_error(ErrorKind::Usage, "kind must be le|ge|eq, got '" + k + "'");
}

BitMatrix bit_matrix_from_json(const json& j, unsigned& n_out) {
  unsigned n = j.at("n").get<unsigned>();
  const json& entries = j.at("entries");
  BitMatrix m(static_cast<size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const json& cell = entries.at(i).at(k);
      int v = cell.is_string() ? (cell.get<std::string>() == "1") : cell.get<int>();
      if (v != 0 && v != 1) throw_error(ErrorKind::Parse, "bit matrix entries must be 0/1");
      m[static_cast<size_t>(n) * i + k] = static_cast<uint8_t>(v);
    }
  n_out = n;
  return m;
}

json verify_report_json(const VerifyReport& r) {
  json mismatches = json::array();
  for (Monomial m : r.mismatches) mismatches.push_back(monomial_to_json(m));
  return json{{"pass", r.pass}, {"mismatches", mismatches}};
}

}  // namespace

extern "C" {

const char* pdf_last_error(void) { return g_last_error.c_str(); }

void pdf_string_free(char* s) { std::free(s); }

pdf_status pdf_poly_from_json(const char* text, pdf_poly** out) {
  return guarded([&]() {
    if (!text || !out) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_poly{poly_from_json(json::parse(text))};
    return PDF_OK;
  });
}

pdf_status pdf_poly_to_json(const pdf_poly* p, char** out_json) {
  return guarded([&]() {
    if (!p || !out_json) throw_error(ErrorKind::Usage, "null argument");
    *out_json = dup_string(poly_to_json(p->value).dump());
    return PDF_OK;
  });
}

void pdf_poly_free(pdf_poly* p) { delete p; }

pdf_status pdf_pde_evaluate(const pdf_poly* p, const unsigned* vars, size_t nvars,
                            unsigned long m, int* out_bit) {
  return guarded([&]() {
    if (!p || !out_bit || (nvars > 0 && !vars)) throw_error(ErrorKind::Usage, "null argument");
    *out_bit = pde_evaluate(p->value, Monomial::of({vars, nvars}), m);
    return PDF_OK;
  });
}

pdf_status pdf_interpolate(const char* table_json, const char* method, const char* ring,
                           pdf_poly** out) {
  return guarded([&]() {
    if (!table_json || !method || !out) throw_error(ErrorKind::Usage, "null argument");
    TruthTable t = table_from_json(json::parse(table_json));
    std::string meth = method;
    if (meth == "sumproduct") {
      RingId rid = ring ? ring_from_json(json(std::string(ring))) : kRationalRing;
      *out = new pdf_poly{interpolate_sumproduct(t, rid)};
    } else if (meth == "binary") {
      *out = new pdf_poly{interpolate_binary(t)};
    } else {
      throw_error(ErrorKind::Usage, "method must be sumproduct|binary");
    }
    return PDF_OK;
  });
}

pdf_status pdf_boole_encode(const char* formula_json, unsigned nvars, pdf_poly** out) {
  return guarded([&]() {
    if (!formula_json || !out) throw_error(ErrorKind::Usage, "null argument");
    Formula::Ptr f = formula_from_json(json::parse(formula_json));
    *out = new pdf_poly{boole_encode(*f, nvars)};
    return PDF_OK;
  });
}

pdf_status pdf_pde_verify(const pdf_poly* p, const char* table_json, unsigned long m,
                          char** out_report_json) {
  return guarded([&]() {
    if (!p || !table_json || !out_report_json) throw_error(ErrorKind::Usage, "null argument");
    VerifyReport r = verify_pde(p->value, table_from_json(json::parse(table_json)), m);
    *out_report_json = dup_string(verify_report_json(r).dump());
    return PDF_OK;
  });
}

pdf_status pdf_circuit_from_json(const char* text, pdf_circuit** out) {
  return guarded([&]() {
    if (!text || !out) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_circuit{circuit_from_json(json::parse(text))};
    return PDF_OK;
  });
}

pdf_status pdf_circuit_to_json(const pdf_circuit* c, char** out_json) {
  return guarded([&]() {
    if (!c || !out_json) throw_error(ErrorKind::Usage, "null argument");
    *out_json = dup_string(circuit_to_json(c->value).dump());
    return PDF_OK;
  });
}

void pdf_circuit_free(pdf_circuit* c) { delete c; }

pdf_status pdf_circuit_subset_product(const unsigned* s, size_t slen, unsigned nvars,
                                      pdf_circuit** out) {
  return guarded([&]() {
    if (!out || (slen > 0 && !s)) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_circuit{SigmaPiSigma::subset_product({s, slen}, nvars)};
    return PDF_OK;
  });
}

pdf_status pdf_circuit_superset_product(const unsigned* s, size_t slen, unsigned nvars,
                                        pdf_circuit** out) {
  return guarded([&]() {
    if (!out || (slen > 0 && !s)) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_circuit{SigmaPiSigma::superset_product({s, slen}, nvars)};
    return PDF_OK;
  });
}

pdf_status pdf_circuit_trivial(const pdf_poly* p, pdf_circuit** out) {
  return guarded([&]() {
    if (!p || !out) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_circuit{SigmaPiSigma::trivial_circuit(p->value)};
    return PDF_OK;
  });
}

pdf_status pdf_circuit_expand(const pdf_circuit* c, int reduce, pdf_poly** out) {
  return guarded([&]() {
    if (!c || !out) throw_error(ErrorKind::Usage, "null argument");
    *out = new pdf_poly{c->value.expand(reduce != 0)};
    return PDF_OK;
  });
}

pdf_status pdf_circuit_size_report(const pdf_circuit* c, char** out_json) {
  return guarded([&]() {
    if (!c || !out_json) throw_error(ErrorKind::Usage, "null argument");
    SizeReport r = c->value.size_report();
    json j{{"rho", r.rho}, {"d", r.d}, {"width", r.width}, {"product", r.product}};
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_pdp_search(const char* request_json, char** out_result_json) {
  return guarded([&]() {
    if (!request_json || !out_result_json) throw_error(ErrorKind::Usage, "null argument");
    json req = json::parse(request_json);
    MLPoly target = poly_from_json(req.at("target"));
    PdpSearchOptions opts;
    if (req.contains("seeds")) opts.seeds = req.at("seeds").get<unsigned>();
    if (req.contains("tol")) opts.tol = req.at("tol").get<double>();
    if (req.contains("seed")) opts.seed = req.at("seed").get<unsigned long>();
    if (req.contains("max_iterations"))
      opts.max_iterations = req.at("max_iterations").get<unsigned>();
    if (req.contains("fixed"))
      for (const auto& f : req.at("fixed"))
        opts.fixed.push_back({f.at("u").get<unsigned>(), f.at("v").get<unsigned>(),
                              f.at("w").get<unsigned>(), f.at("value").get<double>()});
    PdpSearchResult result =
        pdp_search(target, req.at("rho").get<unsigned>(), req.at("d").get<unsigned>(), opts);
    json j{{"circuit", numeric_circuit_to_json(result.circuit)},
           {"residual", result.residual},
           {"converged", result.converged},
           {"seed", result.best_seed},
           {"trace", result.residual_trace}};
    *out_result_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_cardinality(const char* kind, unsigned s, unsigned n, int want_roots,
                           char** out_json) {
  return guarded([&]() {
    if (!kind || !out_json) throw_error(ErrorKind::Usage, "null argument");
    UnivariateInL q = cardinality_pdp(cardinality_kind_of(kind), s, n);
    json j = univariate_to_json(q);
    j["kind"] = kind;
    j["s"] = s;
    if (want_roots) {
      RootsReport roots = factor_roots(q);
      json arr = json::array();
      for (const auto& r : roots.roots)
        arr.push_back(json{{"re", r.real()}, {"im", r.imag()}});
      j["roots"] = arr;
      j["leading"] = roots.leading;
      j["root_residual"] = roots.max_residual;
    }
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_orbit_query(const char* graph_json, const char* what, char** out_json) {
  return guarded([&]() {
    if (!graph_json || !what || !out_json) throw_error(ErrorKind::Usage, "null argument");
    std::string w = what;
    json j;
    if (w == "polya") {
      json g = json::parse(graph_json);
      unsigned n = g.at("n").get<unsigned>();
      j = json{{"n", n}, {"classes", polya_count(n).get_str()}};
    } else {
      GraphSet g = graph_from_json(json::parse(graph_json));
      if (w == "orbit") {
        json arr = json::array();
        for (uint64_t mask : orbit(g)) arr.push_back(graph_to_json(GraphSet{g.n, mask}));
        j = json{{"n", g.n}, {"orbit", arr}, {"size", arr.size()}};
      } else if (w == "automorphisms") {
        json arr = json::array();
        for (const auto& lambda : automorphisms(g)) arr.push_back(lambda);
        j = json{{"n", g.n}, {"automorphisms", arr}, {"size", arr.size()}};
      } else if (w == "classes") {
        json arr = json::array();
        for (uint64_t rep : iso_classes(g.n)) arr.push_back(graph_to_json(GraphSet{g.n, rep}));
        j = json{{"n", g.n}, {"classes", arr}, {"count", arr.size()}};
      } else if (w == "polynomial") {
        j = json{{"n", g.n}, {"polynomial", poly_to_json(orbit_polynomial(g))}};
      } else {
        throw_error(ErrorKind::Usage, "what must be orbit|automorphisms|classes|polya|polynomial");
      }
    }
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_iso_pde(const char* kind, const char* s_json, const char* t_json,
                       unsigned long m, int* out_bit) {
  return guarded([&]() {
    if (!s_json || !t_json || !out_bit) throw_error(ErrorKind::Usage, "null argument");
    GraphSet s = graph_from_json(json::parse(s_json));
    GraphSet t = graph_from_json(json::parse(t_json));
    *out_bit = iso_pde_evaluate(iso_kind_of(kind), s, t, m);
    return PDF_OK;
  });
}

pdf_status pdf_np_certificate(const char* s_json, const char* t_json, char** out_json) {
  return guarded([&]() {
    if (!s_json || !t_json || !out_json) throw_error(ErrorKind::Usage, "null argument");
    GraphSet s = graph_from_json(json::parse(s_json));
    GraphSet t = graph_from_json(json::parse(t_json));
    mpz_class cert = np_certificate(s, t);
    json j{{"n", s.n}, {"certificate", cert.get_str()}};
    if (cert != 0) {
      VertexPermutation sigma = decode_certificate(cert, s.n);
      j["permutation"] = sigma;
      json matrix = json::array();
      for (unsigned v = 0; v < s.n; ++v) {
        json row = json::array();
        for (unsigned w = 0; w < s.n; ++w) row.push_back(sigma[v] == w ? 1 : 0);
        matrix.push_back(row);
      }
      j["matrix"] = matrix;
    }
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_bounds(const char* request_json, char** out_json) {
  return guarded([&]() {
    if (!request_json || !out_json) throw_error(ErrorKind::Usage, "null argument");
    json req = json::parse(request_json);
    GraphSet g = graph_from_json(req.at("graph"));
    LegendreBound legendre = legendre_lower_bound(g.n);
    json exps = json::object();
    for (auto [p, e] : legendre.exponents) exps[std::to_string(p)] = e;
    json j{{"n", g.n},
           {"legendre", json{{"alpha_sum", legendre.alpha_sum},
                             {"bound", legendre.bound},
                             {"exponents", exps}}}};
    if (req.contains("rho") && req.contains("d")) {
      IsoKind kind = req.contains("kind")
                         ? iso_kind_of(req.at("kind").get<std::string>().c_str())
                         : IsoKind::Iso;
      ConstraintSystem sys = constraint_system(kind, g, req.at("rho").get<unsigned>(),
                                               req.at("d").get<unsigned>());
      json eqs = json::array();
      for (const auto& eq : sys.equations)
        eqs.push_back(json{{"class", graph_to_json(GraphSet{g.n, eq.class_rep})},
                           {"orbit_size", eq.orbit_size},
                           {"target", eq.target_one ? 1 : 0}});
      j["constraints"] = json{{"unknowns", sys.unknown_count},
                              {"equations", eqs.size()},
                              {"classes", eqs},
                              {"consistent", sys.unknown_count >= eqs.size()}};
    }
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_prop3_verify(unsigned nvars, const unsigned* subset, size_t slen,
                            char** out_json) {
  return guarded([&]() {
    if (!out_json || (slen > 0 && !subset)) throw_error(ErrorKind::Usage, "null argument");
    Prop3Report r = prop3_literal_verify(nvars, {subset, slen});
    json j{{"pass", r.pass},
           {"nvars", r.nvars},
           {"subset", r.subset},
           {"exponents", r.exponents},
           {"detail", r.detail}};
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_resolvent_check(const char* graph_json, unsigned t_max, char** out_json) {
  return guarded([&]() {
    if (!graph_json || !out_json) throw_error(ErrorKind::Usage, "null argument");
    GraphSet g = graph_from_json(json::parse(graph_json));
    ResolventReport r = resolvent_check(g, t_max);
    json fits = json::array();
    for (const auto& fit : r.fits) {
      json binom = json::array();
      for (const auto& a : fit.binom) binom.push_back(rational_to_string(a));
      fits.push_back(json{{"t", fit.t}, {"fits", fit.fits}, {"binomial", binom}});
    }
    json j{{"pass", r.pass}, {"cosets", r.coset_count}, {"fits", fits}};
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_det(const char* matrix_json, const char* method, char** out_value) {
  return guarded([&]() {
    if (!matrix_json || !method || !out_value) throw_error(ErrorKind::Usage, "null argument");
    ExactMatrix a = matrix_from_json(json::parse(matrix_json));
    std::string meth = method;
    mpq_class value;
    if (meth == "grassmann") value = det_grassmann(a, GrassmannMode::Exterior);
    else if (meth == "grassmann-literal") value = det_grassmann(a, GrassmannMode::Literal);
    else if (meth == "vandermonde") value = det_vandermonde(a);
    else if (meth == "cofactor") value = oracles::det_cofactor(a);
    else throw_error(ErrorKind::Usage, "method must be grassmann|grassmann-literal|vandermonde|cofactor");
    *out_value = dup_string(rational_to_string(value));
    return PDF_OK;
  });
}

pdf_status pdf_perm(const char* matrix_json, char** out_value) {
  return guarded([&]() {
    if (!matrix_json || !out_value) throw_error(ErrorKind::Usage, "null argument");
    ExactMatrix a = matrix_from_json(json::parse(matrix_json));
    *out_value = dup_string(rational_to_string(permanent(a)));
    return PDF_OK;
  });
}

pdf_status pdf_ftree(const char* matrix_json, int* out_bit) {
  return guarded([&]() {
    if (!matrix_json || !out_bit) throw_error(ErrorKind::Usage, "null argument");
    unsigned n = 0;
    BitMatrix m = bit_matrix_from_json(json::parse(matrix_json), n);
    *out_bit = f_tree(m, n);
    return PDF_OK;
  });
}

pdf_status pdf_fcycles(const char* matrix_json, int* out_bit) {
  return guarded([&]() {
    if (!matrix_json || !out_bit) throw_error(ErrorKind::Usage, "null argument");
    unsigned n = 0;
    BitMatrix m = bit_matrix_from_json(json::parse(matrix_json), n);
    *out_bit = f_cycles(m, n);
    return PDF_OK;
  });
}

pdf_status pdf_fdet2(const char* bits, int* out_bit) {
  return guarded([&]() {
    if (!bits || !out_bit) throw_error(ErrorKind::Usage, "null argument");
    size_t len = std::strlen(bits);
    unsigned n = 0;
    while (static_cast<size_t>(n) * n < len) ++n;
    if (static_cast<size_t>(n) * n != len)
      throw_error(ErrorKind::Usage, "bit string length must be a perfect square n^2");
    uint64_t t = 0;
    for (size_t i = 0; i < len; ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw_error(ErrorKind::Parse, "bits must be 0/1 characters");
      if (bits[i] == '1') t |= uint64_t{1} << i;
    }
    *out_bit = f_det_gf2(n, t);
    return PDF_OK;
  });
}

pdf_status pdf_roots_transcendental(unsigned d, double tol, double grid_step,
                                    char** out_json) {
  return guarded([&]() {
    if (!out_json) throw_error(ErrorKind::Usage, "null argument");
    RootsCheckReport r = integer_roots_check(d, tol > 0 ? tol : 1e-9,
                                             grid_step > 0 ? grid_step : 0.01);
    json j{{"pass", r.pass},
           {"d", r.d},
           {"max_root_abs", r.max_root_abs},
           {"min_offgrid_abs", r.min_offgrid_abs},
           {"failures", r.failures}};
    *out_json = dup_string(j.dump());
    return PDF_OK;
  });
}

pdf_status pdf_selftest(const char* suite, unsigned long seed, char** out_report_json) {
  return guarded([&]() -> pdf_status {
    if (!suite || !out_report_json) throw_error(ErrorKind::Usage, "null argument");
    std::string s = suite;
    Suite which;
    if (s == "quick") which = Suite::Quick;
    else if (s == "full") which = Suite::Full;
    else throw_error(ErrorKind::Usage, "suite must be quick|full");
    SelftestReport report = run_selftest(which, seed);
    json results = json::array();
    for (const auto& r : report.results)
      results.push_back(json{{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"detail", r.detail},
                             {"millis", r.millis}});
    json j{{"pass", report.pass}, {"total_millis", report.total_millis}, {"results", results}};
    *out_report_json = dup_string(j.dump());
    return report.pass ? PDF_OK : PDF_E_VERIFY;
  });
}

}  // extern "C"

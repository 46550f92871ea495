#include "pdeforge/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "pdeforge/boolean.hpp"
#include "pdeforge/circuit.hpp"
#include "pdeforge/matrixalg.hpp"
#include "pdeforge/oracles.hpp"
#include "pdeforge/orbits.hpp"
#include "pdeforge/symmetric.hpp"

namespace pdeforge {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

MLPoly worked_example_poly() {
  // 1 + x0 + x0*x1 over Q.
  MLPoly p(2, kRationalRing);
  p.add_term(Monomial::empty(), RingElem::integer(1));
  p.add_term(Monomial::single(0), RingElem::integer(1));
  p.add_term(Monomial::of(std::vector<unsigned>{0, 1}), RingElem::integer(1));
  return p;
}

ExactMatrix random_matrix(std::mt19937_64& rng, unsigned n, bool nonzero_first_column) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  ExactMatrix m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      int p = num(rng);
      if (nonzero_first_column && j == 0)
        while (p == 0) p = num(rng);
      m.at(i, j) = mpq_class(p, den(rng));
      m.at(i, j).canonicalize();
    }
  return m;
}

void criterion_worked_example(Check& c, Suite) {
  TruthTable t = TruthTable::from_bit_string(2, "1101");
  MLPoly p = interpolate_sumproduct(t, kRationalRing);
  c.require(p == worked_example_poly(), "interpolant differs from 1+x0+x0*x1");
  for (size_t b = 0; b < 4; ++b)
    c.require(pde_evaluate(p, Monomial{b}, 1) == (t.bit(b) ? 1 : 0),
              "PDE row " + std::to_string(b) + " mismatch");
}

void criterion_binary_equivalence(Check& c, Suite suite) {
  unsigned n = suite == Suite::Full ? 3 : 2;
  for (uint64_t bits = 0; bits < (uint64_t{1} << (1u << n)); ++bits) {
    std::vector<bool> v(size_t{1} << n);
    for (size_t i = 0; i < v.size(); ++i) v[i] = (bits >> i) & 1;
    TruthTable t(n, v);
    MLPoly viaBinary = interpolate_binary(t);
    MLPoly viaSum = interpolate_sumproduct(t, kGf2Ring);
    if (!(viaBinary == viaSum)) {
      c.require(false, "table " + std::to_string(bits) + " disagrees");
      return;
    }
  }
}

void enumerate_formulas(unsigned height, unsigned nvars,
                        std::vector<Formula::Ptr>& out) {
  out.clear();
  for (unsigned i = 0; i < nvars; ++i) out.push_back(Formula::make_var(i));
  out.push_back(Formula::make_const(false));
  out.push_back(Formula::make_const(true));
  for (unsigned h = 2; h <= height; ++h) {
    std::vector<Formula::Ptr> next = out;
    for (const auto& f : out) next.push_back(Formula::make_not(f));
    for (const auto& f : out)
      for (const auto& g : out) {
        next.push_back(Formula::make_and(f, g));
        next.push_back(Formula::make_or(f, g));
      }
    out = std::move(next);
  }
}

void criterion_boole(Check& c, Suite suite) {
  unsigned height = suite == Suite::Full ? 3 : 2;
  std::vector<Formula::Ptr> formulas;
  enumerate_formulas(height, 3, formulas);
  std::vector<RingElem> point(3, RingElem::integer(0));
  for (const auto& f : formulas) {
    MLPoly p = boole_encode(*f, 3);
    for (uint64_t b = 0; b < 8; ++b) {
      for (unsigned i = 0; i < 3; ++i) point[i] = RingElem::integer((b >> i) & 1);
      bool want = eval_formula(*f, Monomial{b});
      mpq_class got = p.evaluate(point).rational_value();
      if (got != (want ? 1 : 0)) {
        c.require(false, "encoding disagrees with semantics");
        return;
      }
    }
  }
  c.detail << formulas.size() << " formulas";
}

void criterion_product_counts(Check& c, Suite suite, unsigned long seed) {
  unsigned exhaustive_cap = suite == Suite::Full ? 8 : 5;
  unsigned max_n = suite == Suite::Full ? 12 : 6;
  std::mt19937_64 rng(seed * 11 + 4);
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<uint64_t> subsets;
    if (n <= exhaustive_cap) {
      for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) subsets.push_back(s);
    } else {
      std::uniform_int_distribution<uint64_t> dist(0, (uint64_t{1} << n) - 1);
      subsets = {0, (uint64_t{1} << n) - 1};
      for (int k = 0; k < 25; ++k) subsets.push_back(dist(rng));
    }
    for (uint64_t smask : subsets) {
      std::vector<unsigned> s = Monomial{smask}.indices();
      unsigned card = static_cast<unsigned>(s.size());
      MLPoly sub = SigmaPiSigma::subset_product(s, n).expand(true);
      MLPoly super = SigmaPiSigma::superset_product(s, n).expand(true);
      c.require(sub.term_count() == (size_t{1} << card), "subset term count");
      c.require(super.term_count() == (size_t{1} << (n - card)), "superset term count");
      for (const auto& [m, coeff] : sub.terms())
        c.require(coeff.is_one() && m.subset_of(Monomial{smask}), "subset term shape");
      for (const auto& [m, coeff] : super.terms())
        c.require(coeff.is_one() && Monomial{smask}.subset_of(m), "superset term shape");
      if (!c.pass) return;
    }
  }
}

void criterion_cardinality(Check& c, Suite suite) {
  unsigned shortcut_cap = suite == Suite::Full ? 12 : 6;
  unsigned expansion_cap = suite == Suite::Full ? 8 : 5;
  const CardinalityKind kinds[] = {CardinalityKind::LessEq, CardinalityKind::GreaterEq,
                                   CardinalityKind::Equal};
  for (unsigned n = 1; n <= shortcut_cap; ++n)
    for (CardinalityKind kind : kinds)
      for (unsigned s = 0; s <= n; ++s) {
        UnivariateInL q = cardinality_pdp(kind, s, n);
        TruthTable want = oracles::threshold_table(kind, s, n);
        for (uint64_t b = 0; b < (uint64_t{1} << n); ++b)
          if (pdp_evaluate_cardinality(q, Monomial{b}) != (want.bit(b) ? 1 : 0)) {
            c.require(false, "shortcut mismatch at n=" + std::to_string(n));
            return;
          }
      }
  for (unsigned n = 1; n <= expansion_cap; ++n)
    for (CardinalityKind kind : kinds)
      for (unsigned s = 0; s <= n; ++s) {
        UnivariateInL q = cardinality_pdp(kind, s, n);
        VerifyReport r = verify_pde(q.to_mlpoly(), oracles::threshold_table(kind, s, n), 1);
        c.require(r.pass, "full expansion mismatch at n=" + std::to_string(n));
        if (!c.pass) return;
      }
  for (unsigned n = 1; n <= expansion_cap; ++n)
    for (unsigned t = 0; t <= n; ++t) {
      UnivariateInL q = e_to_binomial(n, t);
      c.require(q.to_mlpoly_via_powers() == elementary_symmetric(n, t),
                "C(ell," + std::to_string(t) + ") expansion identity at n=" + std::to_string(n));
      if (!c.pass) return;
    }
}

void criterion_newton(Check& c, Suite suite) {
  unsigned cap = suite == Suite::Full ? 6 : 4;
  for (unsigned n = 1; n <= cap; ++n) {
    // Power sums p_i as dense staging polynomials.
    std::vector<GeneralPoly> power_sums;
    for (unsigned i = 1; i <= n; ++i) {
      GeneralPoly p(n, kRationalRing, 64);
      for (unsigned v = 0; v < n; ++v) {
        GeneralPoly::Exponents e(n, 0);
        e[v] = i;
        p.add_term(std::move(e), RingElem::integer(1));
      }
      power_sums.push_back(std::move(p));
    }
    for (unsigned t = 1; t <= n; ++t) {
      GeneralPoly acc(n, kRationalRing, 64);
      for (const auto& term : newton_e_from_p(t)) {
        GeneralPoly prod = GeneralPoly::constant(n, RingElem::rational(term.coeff), 64);
        for (unsigned i = 1; i <= t; ++i)
          for (unsigned rep = 0; rep < term.multiplicities[i - 1]; ++rep)
            prod = prod * power_sums[i - 1];
        acc = acc + prod;
      }
      c.require(acc == GeneralPoly::from_mlpoly(elementary_symmetric(n, t)),
                "newton identity t=" + std::to_string(t) + " n=" + std::to_string(n));
      if (!c.pass) return;
    }
  }
}

void criterion_det_triple(Check& c, Suite suite, unsigned long seed) {
  std::mt19937_64 rng(seed * 11 + 7);
  unsigned trials = suite == Suite::Full ? 50 : 8;
  unsigned max_n = suite == Suite::Full ? 5 : 3;
  for (unsigned n = 2; n <= max_n; ++n)
    for (unsigned trial = 0; trial < trials; ++trial) {
      ExactMatrix a = random_matrix(rng, n, /*nonzero_first_column=*/true);
      mpq_class want = oracles::det_cofactor(a);
      c.require(det_grassmann(a, GrassmannMode::Exterior) == want, "grassmann != cofactor");
      c.require(det_vandermonde(a) == want, "vandermonde != cofactor");
      if (!c.pass) return;
    }
}

void criterion_permanent(Check& c, Suite suite, unsigned long seed) {
  std::mt19937_64 rng(seed * 11 + 8);
  unsigned trials = suite == Suite::Full ? 50 : 8;
  unsigned max_n = suite == Suite::Full ? 6 : 4;
  for (unsigned n = 2; n <= max_n; ++n)
    for (unsigned trial = 0; trial < trials; ++trial) {
      ExactMatrix a = random_matrix(rng, n, false);
      c.require(permanent(a) == oracles::permanent_enumeration(a), "permanent mismatch");
      if (!c.pass) return;
    }
}

void criterion_anticommutation(Check& c, Suite suite) {
  unsigned cap = suite == Suite::Full ? 4 : 3;
  for (unsigned n = 1; n <= cap; ++n) {
    try {
      grassmann_verify_literal(n);
    } catch (const Error& e) {
      c.require(false, e.what());
    }
  }
}

void criterion_tree_cycles(Check& c, Suite suite) {
  const unsigned n = 3;
  for (uint64_t bits = 0; bits < (uint64_t{1} << (n * n)); ++bits) {
    BitMatrix m(n * n);
    for (unsigned i = 0; i < n * n; ++i) m[i] = (bits >> i) & 1;
    c.require(f_tree(m, n) == (oracles::functional_tree(m, n) ? 1 : 0), "tree mismatch");
    c.require(f_cycles(m, n) == (oracles::permutation_matrix(m, n) ? 1 : 0), "cycles mismatch");
    if (!c.pass) return;
  }
  unsigned cap = suite == Suite::Full ? 5 : 4;
  for (unsigned k = 1; k <= cap; ++k) {
    size_t want = 1;
    for (unsigned i = 0; i + 1 < k; ++i) want *= k;
    c.require(p_tree_symbolic(k).term_count() == want,
              "tree polynomial term count at n=" + std::to_string(k));
  }
}

void criterion_det_gf2(Check& c, Suite suite) {
  unsigned cap = suite == Suite::Full ? 3 : 2;
  for (unsigned n = 2; n <= cap; ++n) {
    size_t want_terms = 1;
    for (unsigned k = 0; k < n; ++k) want_terms *= (size_t{1} << n) - (size_t{1} << k);
    c.require(p_det_poly(n).term_count() == want_terms, "term count formula");
    for (uint64_t t = 0; t < (uint64_t{1} << (n * n)); ++t) {
      bool invertible = oracles::gf2_rank(n, t) == n;
      if (f_det_gf2(n, t) != (invertible ? 1 : 0)) {
        c.require(false, "rank oracle mismatch at t=" + std::to_string(t));
        return;
      }
    }
  }
}

void criterion_orbits(Check& c, Suite suite, unsigned long seed) {
  c.require(polya_count(3) == 16, "polya(3) != 16");
  c.require(iso_classes(3).size() == 16, "iso_classes(3) != 16");
  c.require(polya_count(4) == mpz_class(iso_classes(4).size()), "polya(4) != class count");

  std::mt19937_64 rng(seed * 11 + 12);
  unsigned trials = suite == Suite::Full ? 100 : 20;
  std::uniform_int_distribution<unsigned> pick_n(2, 5);
  for (unsigned trial = 0; trial < trials; ++trial) {
    unsigned n = pick_n(rng);
    EdgeSpace space(n);
    std::uniform_int_distribution<uint64_t> dist(0, (uint64_t{1} << space.edge_count()) - 1);
    GraphSet s{n, dist(rng)};
    size_t fact = 1;
    for (unsigned k = 2; k <= n; ++k) fact *= k;
    c.require(orbit(s).size() * automorphisms(s).size() == fact, "orbit-stabilizer");
    if (!c.pass) return;
  }

  // Exhaustive T against the relation oracles; the orbit polynomials are
  // built once per S.
  auto check_all_t = [&](GraphSet s) {
    EdgeSpace space(s.n);
    MLPoly iso = orbit_polynomial(s);
    MLPoly sub = sub_iso_polynomial(s);
    MLPoly super = super_iso_polynomial(s);
    for (uint64_t tmask = 0; tmask < (uint64_t{1} << space.edge_count()); ++tmask) {
      GraphSet t{s.n, tmask};
      Monomial mono{tmask};
      c.require(iso.coefficient(mono).is_one() == oracles::iso_relation(s, t), "iso PDE");
      c.require(sub.coefficient(mono).is_one() == oracles::sub_iso_relation(s, t), "sub PDE");
      c.require(super.coefficient(mono).is_one() == oracles::super_iso_relation(s, t),
                "super PDE");
      if (!c.pass) return;
    }
  };

  // n = 3: every S, every T.
  for (uint64_t smask = 0; smask < 64 && c.pass; ++smask) check_all_t(GraphSet{3, smask});

  if (suite == Suite::Full) {
    // n = 4: sampled S, exhaustive T.
    std::uniform_int_distribution<uint64_t> dist4(0, (uint64_t{1} << 12) - 1);
    for (uint64_t smask : {dist4(rng), dist4(rng), dist4(rng)})
      if (c.pass) check_all_t(GraphSet{4, smask});
  }
}

void criterion_certificates(Check& c, Suite suite, unsigned long seed) {
  std::mt19937_64 rng(seed * 11 + 13);
  unsigned trials = suite == Suite::Full ? 100 : 20;
  std::uniform_int_distribution<unsigned> pick_n(2, 5);
  for (unsigned trial = 0; trial < trials; ++trial) {
    unsigned n = pick_n(rng);
    EdgeSpace space(n);
    std::uniform_int_distribution<uint64_t> dist(0, (uint64_t{1} << space.edge_count()) - 1);
    GraphSet s{n, dist(rng)};
    auto perms = all_permutations(n);
    VertexPermutation lambda = perms[rng() % perms.size()];
    GraphSet t = act(lambda, s);
    mpz_class cert = np_certificate(s, t);
    c.require(cert != 0, "certificate missing on isomorphic pair");
    if (cert != 0) {
      VertexPermutation sigma = decode_certificate(cert, n);
      c.require(act(sigma, s) == t, "decoded permutation does not map S onto T");
    }
    // Random pair: the certificate is nonzero exactly on isomorphic pairs.
    GraphSet u{n, dist(rng)};
    bool related = oracles::iso_relation(u, s);
    c.require((np_certificate(s, u) != 0) == related, "certificate/relation mismatch");
    if (!c.pass) return;
  }
}

void criterion_prop3(Check& c, Suite) {
  for (uint64_t smask = 0; smask < 8; ++smask) {
    std::vector<unsigned> subset = Monomial{smask}.indices();
    Prop3Report r = prop3_literal_verify(3, subset);
    c.require(r.pass, "prop3 failed for |S|=" + std::to_string(subset.size()));
    if (!c.pass) return;
  }
}

void criterion_legendre(Check& c, Suite) {
  LegendreBound b4 = legendre_lower_bound(4);
  c.require(b4.alpha_sum == 4, "alpha sum for 4! != 4");
  c.require(b4.bound == 52, "bound for n=4 != 52");
  for (unsigned n = 1; n <= 10; ++n) {
    LegendreBound b = legendre_lower_bound(n);
    auto want = oracles::factor_factorial(n);
    unsigned long alpha = 0;
    for (auto [p, e] : want) alpha += e;
    c.require(b.alpha_sum == alpha, "alpha sum mismatch at n=" + std::to_string(n));
    c.require(b.exponents.size() == want.size() &&
                  std::equal(b.exponents.begin(), b.exponents.end(), want.begin()),
              "prime exponents mismatch at n=" + std::to_string(n));
  }
}

void criterion_pdp_search(Check& c, Suite suite, unsigned long seed) {
  MLPoly target = worked_example_poly();
  PdpSearchOptions opts;
  opts.seed = seed;
  opts.seeds = suite == Suite::Full ? 12 : 6;
  PdpSearchResult r = pdp_search(target, 1, 2, opts);
  c.require(r.residual < 1e-8, "free search residual " + std::to_string(r.residual));
  for (size_t i = 1; i < r.residual_trace.size(); ++i)
    c.require(r.residual_trace[i] <= r.residual_trace[i - 1] + 1e-15, "trace not monotone");

  // Partial assignment from the worked example; the three remaining
  // unknowns are solvable.
  PdpSearchOptions fixed = opts;
  fixed.fixed = {{0, 0, 2, -1.0},
                 {0, 1, 1, -(std::sqrt(4.0 * std::sqrt(15.0) + 17.0) + 1.0) / 2.0},
                 {0, 1, 2, 1.0}};
  PdpSearchResult rf = pdp_search(target, 1, 2, fixed);
  c.require(rf.residual < 1e-6, "partial assignment residual " + std::to_string(rf.residual));
}

void criterion_transcendental(Check& c, Suite) {
  for (unsigned d : {2u, 3u, 5u, 12u}) {
    RootsCheckReport r = integer_roots_check(d, 1e-9, 0.01);
    c.require(r.pass, "roots check failed for d=" + std::to_string(d));
  }
}

void criterion_resolvent(Check& c, Suite suite) {
  EdgeSpace space(3);
  GraphSet s{3, uint64_t{1} << space.index_of(0, 1)};
  ResolventReport r = resolvent_check(s, suite == Suite::Full ? 2 : 1);
  c.require(r.pass, "resolvent reduction does not fit the binomial basis");
  c.require(r.coset_count == 120, "|S_6 / G_3| != 120");
}

}  // namespace

SelftestReport run_selftest(Suite suite, unsigned long seed) {
  using Runner = std::function<void(Check&)>;
  struct Item {
    int id;
    const char* name;
    Runner run;
  };
  const std::vector<Item> items = {
      {1, "worked example interpolation", [&](Check& c) { criterion_worked_example(c, suite); }},
      {2, "binary/sum-product equivalence",
       [&](Check& c) { criterion_binary_equivalence(c, suite); }},
      {3, "Boole correspondence", [&](Check& c) { criterion_boole(c, suite); }},
      {4, "subset/superset term counts",
       [&](Check& c) { criterion_product_counts(c, suite, seed); }},
      {5, "cardinality PDPs", [&](Check& c) { criterion_cardinality(c, suite); }},
      {6, "Newton identities", [&](Check& c) { criterion_newton(c, suite); }},
      {7, "determinant triple agreement",
       [&](Check& c) { criterion_det_triple(c, suite, seed); }},
      {8, "permanent vs enumeration", [&](Check& c) { criterion_permanent(c, suite, seed); }},
      {9, "anticommutation", [&](Check& c) { criterion_anticommutation(c, suite); }},
      {10, "functional trees and cycle covers",
       [&](Check& c) { criterion_tree_cycles(c, suite); }},
      {11, "GF(2) determinant indicator", [&](Check& c) { criterion_det_gf2(c, suite); }},
      {12, "orbit machinery", [&](Check& c) { criterion_orbits(c, suite, seed); }},
      {13, "NP certificates", [&](Check& c) { criterion_certificates(c, suite, seed); }},
      {14, "orbit list literal verification", [&](Check& c) { criterion_prop3(c, suite); }},
      {15, "Legendre bound", [&](Check& c) { criterion_legendre(c, suite); }},
      {16, "numeric PDP search", [&](Check& c) { criterion_pdp_search(c, suite, seed); }},
      {17, "transcendental integer roots", [&](Check& c) { criterion_transcendental(c, suite); }},
      {18, "resolvent binomial fit", [&](Check& c) { criterion_resolvent(c, suite); }},
  };

  SelftestReport report;
  report.pass = true;
  for (const auto& item : items) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      item.run(check);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail << "exception: " << e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    CriterionResult result;
    result.id = item.id;
    result.name = item.name;
    result.pass = check.pass;
    result.detail = check.detail.str();
    result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    report.total_millis += result.millis;
    report.pass = report.pass && result.pass;
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace pdeforge

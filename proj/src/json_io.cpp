#include "pdeforge/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace pdeforge {

json ring_to_json(RingId ring) {
  switch (ring.tag) {
    case RingTag::GF2: return "gf2";
    case RingTag::Rational: return "q";
    case RingTag::Cyclotomic: return json{{"cyclotomic", ring.modulus}};
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingId ring_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "q" || s == "Q" || s == "rational") return kRationalRing;
    if (s == "gf2" || s == "GF2" || s == "f2") return kGf2Ring;
    throw_error(ErrorKind::Parse, "unknown ring '" + s + "'");
  }
  if (j.is_object() && j.contains("cyclotomic"))
    return RingId{RingTag::Cyclotomic, j.at("cyclotomic").get<unsigned>()};
  throw_error(ErrorKind::Parse, "malformed ring descriptor");
}

json elem_to_json(const RingElem& e) {
  switch (e.tag()) {
    case RingTag::GF2: return e.gf2_value();
    case RingTag::Rational: return rational_to_string(e.rational_value());
    case RingTag::Cyclotomic: {
      json coeffs = json::array();
      for (const auto& c : e.cyclo_coeffs()) coeffs.push_back(rational_to_string(c));
      return json{{"m", e.modulus()}, {"coeffs", coeffs}};
    }
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingElem elem_from_json(const json& j, RingId ring) {
  switch (ring.tag) {
    case RingTag::GF2:
      if (j.is_number_integer()) return RingElem::gf2(j.get<int>());
      if (j.is_string()) return RingElem::gf2(rational_from_string(j.get<std::string>()).get_num() % 2 != 0);
      break;
    case RingTag::Rational:
      if (j.is_string()) return RingElem::rational(rational_from_string(j.get<std::string>()));
      if (j.is_number_integer()) return RingElem::integer(j.get<long>());
      break;
    case RingTag::Cyclotomic:
      if (j.is_object()) {
        unsigned m = j.at("m").get<unsigned>();
        std::vector<mpq_class> coeffs;
        for (const auto& c : j.at("coeffs"))
          coeffs.push_back(rational_from_string(c.get<std::string>()));
        return RingElem::cyclotomic(m, std::move(coeffs));
      }
      break;
  }
  throw_error(ErrorKind::Parse, "malformed ring element: " + j.dump());
}

json monomial_to_json(Monomial m) {
  json vars = json::array();
  for (unsigned i : m.indices()) vars.push_back(i);
  return vars;
}

Monomial monomial_from_json(const json& j) {
  std::vector<unsigned> vars = j.get<std::vector<unsigned>>();
  return Monomial::of(vars);
}

json poly_to_json(const MLPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(json{{"vars", monomial_to_json(m)}, {"coeff", elem_to_json(c)}});
  return json{{"n", p.nvars()}, {"ring", ring_to_json(p.ring())}, {"terms", terms}};
}

MLPoly poly_from_json(const json& j) {
  RingId ring = ring_from_json(j.at("ring"));
  MLPoly p(j.at("n").get<unsigned>(), ring);
  for (const auto& term : j.at("terms"))
    p.add_term(monomial_from_json(term.at("vars")), elem_from_json(term.at("coeff"), ring));
  return p;
}

json circuit_to_json(const SigmaPiSigma& c) {
  json entries = json::array();
  for (unsigned u = 0; u < c.rho(); ++u) {
    json row = json::array();
    for (unsigned v = 0; v < c.d(); ++v) {
      json form = json::array();
      for (unsigned w = 0; w <= c.nvars(); ++w) form.push_back(elem_to_json(c.at(u, v, w)));
      row.push_back(form);
    }
    entries.push_back(row);
  }
  return json{{"rho", c.rho()},
              {"d", c.d()},
              {"n", c.nvars()},
              {"ring", ring_to_json(c.ring())},
              {"entries", entries}};
}

SigmaPiSigma circuit_from_json(const json& j) {
  RingId ring = j.contains("ring") ? ring_from_json(j.at("ring")) : kRationalRing;
  unsigned rho = j.at("rho").get<unsigned>();
  unsigned d = j.at("d").get<unsigned>();
  unsigned n = j.at("n").get<unsigned>();
  SigmaPiSigma c(rho, d, n, ring);
  const json& entries = j.at("entries");
  if (entries.size() != rho) throw_error(ErrorKind::Parse, "entry block count != rho");
  for (unsigned u = 0; u < rho; ++u) {
    if (entries[u].size() != d) throw_error(ErrorKind::Parse, "factor count != d");
    for (unsigned v = 0; v < d; ++v) {
      if (entries[u][v].size() != n + 1)
        throw_error(ErrorKind::Parse, "linear form width != 1 + n");
      for (unsigned w = 0; w <= n; ++w)
        c.at(u, v, w) = elem_from_json(entries[u][v][w], ring);
    }
  }
  return c;
}

json numeric_circuit_to_json(const NumericCircuit& c) {
  json entries = json::array();
  for (unsigned u = 0; u < c.rho; ++u) {
    json row = json::array();
    for (unsigned v = 0; v < c.d; ++v) {
      json form = json::array();
      for (unsigned w = 0; w <= c.nvars; ++w) form.push_back(c.at(u, v, w));
      row.push_back(form);
    }
    entries.push_back(row);
  }
  return json{{"rho", c.rho}, {"d", c.d}, {"n", c.nvars}, {"numeric", true}, {"entries", entries}};
}

NumericCircuit numeric_circuit_from_json(const json& j) {
  NumericCircuit c(j.at("rho").get<unsigned>(), j.at("d").get<unsigned>(),
                   j.at("n").get<unsigned>());
  const json& entries = j.at("entries");
  for (unsigned u = 0; u < c.rho; ++u)
    for (unsigned v = 0; v < c.d; ++v)
      for (unsigned w = 0; w <= c.nvars; ++w) c.at(u, v, w) = entries[u][v][w].get<double>();
  return c;
}

json table_to_json(const TruthTable& t) {
  std::string bits(t.size(), '0');
  for (size_t i = 0; i < t.size(); ++i)
    if (t.bit(i)) bits[i] = '1';
  return json{{"n", t.nvars()}, {"bits", bits}};
}

TruthTable table_from_json(const json& j) {
  return TruthTable::from_bit_string(j.at("n").get<unsigned>(),
                                     j.at("bits").get<std::string>());
}

Formula::Ptr formula_from_json(const json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "var") return Formula::make_var(j.at("index").get<unsigned>());
  if (op == "const") return Formula::make_const(j.at("value").get<bool>());
  if (op == "not") return Formula::make_not(formula_from_json(j.at("child")));
  if (op == "and")
    return Formula::make_and(formula_from_json(j.at("left")), formula_from_json(j.at("right")));
  if (op == "or")
    return Formula::make_or(formula_from_json(j.at("left")), formula_from_json(j.at("right")));
  throw_error(ErrorKind::Parse, "unknown formula op '" + op + "'");
}

json graph_to_json(const GraphSet& g) {
  EdgeSpace space(g.n);
  json edges = json::array();
  uint64_t bits = g.edges;
  while (bits) {
    unsigned e = static_cast<unsigned>(__builtin_ctzll(bits));
    bits &= bits - 1;
    auto [i, j] = space.pair_of(e);
    edges.push_back(json::array({i, j}));
  }
  return json{{"n", g.n}, {"edges", edges}};
}

GraphSet graph_from_json(const json& j) {
  GraphSet g;
  g.n = j.at("n").get<unsigned>();
  EdgeSpace space(g.n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw_error(ErrorKind::Parse, "edge must be a pair [i,j]");
    g.edges |= uint64_t{1} << space.index_of(e[0].get<unsigned>(), e[1].get<unsigned>());
  }
  return g;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.n; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.n; ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"n", m.n}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const json& j) {
  unsigned n = j.at("n").get<unsigned>();
  ExactMatrix m(n);
  const json& entries = j.at("entries");
  if (entries.size() != n) throw_error(ErrorKind::Parse, "matrix row count != n");
  for (unsigned i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw_error(ErrorKind::Parse, "matrix column count != n");
    for (unsigned k = 0; k < n; ++k) {
      const json& cell = entries[i][k];
      if (cell.is_string()) m.at(i, k) = rational_from_string(cell.get<std::string>());
      else if (cell.is_number_integer()) m.at(i, k) = mpq_class(cell.get<long>());
      else throw_error(ErrorKind::Parse, "matrix entries must be integers or rational strings");
    }
  }
  return m;
}

json univariate_to_json(const UnivariateInL& q) {
  json binom = json::array();
  for (const auto& a : q.binom) binom.push_back(rational_to_string(a));
  json mono = json::array();
  for (const auto& c : q.monomial_basis()) mono.push_back(rational_to_string(c));
  return json{{"n", q.nvars}, {"binomial", binom}, {"monomial", mono}};
}

json parse_json_arg(const std::string& text) {
  std::string trimmed = text;
  size_t start = trimmed.find_first_not_of(" \t\n");
  if (start == std::string::npos)
    throw_error(ErrorKind::Parse, "empty JSON argument");
  if (trimmed[start] == '{' || trimmed[start] == '[' || trimmed[start] == '"') {
    json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw_error(ErrorKind::Parse, "malformed inline JSON");
    return j;
  }
  std::ifstream in(text);
  if (!in) throw_error(ErrorKind::Parse, "cannot open JSON file '" + text + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw_error(ErrorKind::Parse, "malformed JSON in file '" + text + "'");
  return j;
}

}  // namespace pdeforge

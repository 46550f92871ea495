#pragma once

#include <nlohmann/json_fwd.hpp>

#include "pdeforge/boolean.hpp"
#include "pdeforge/circuit.hpp"
#include "pdeforge/matrixalg.hpp"
#include "pdeforge/orbits.hpp"
#include "pdeforge/symmetric.hpp"

// JSON encodings shared by the C API and the CLI:
//   ring      "q" | "gf2" | {"cyclotomic": m}
//   element   GF(2) as 0/1, rational as "p/q", cyclotomic as
//             {"m": m, "coeffs": ["p/q", ...]}
//   poly      {"n": N, "ring": ..., "terms": [{"vars": [...], "coeff": ...}]}
//   circuit   {"rho": r, "d": d, "n": N, "ring": ..., "entries": [[[...]]]}
//   table     {"n": N, "bits": "1101..."} with the index-0 bit first
//   graph     {"n": 3, "edges": [[0,1],[1,2]]}
//   matrix    {"n": 2, "entries": [["1","0"],["0","1"]]}

namespace pdeforge {

using json = nlohmann::json;

json ring_to_json(RingId ring);
RingId ring_from_json(const json& j);

json elem_to_json(const RingElem& e);
RingElem elem_from_json(const json& j, RingId ring);

json poly_to_json(const MLPoly& p);
MLPoly poly_from_json(const json& j);

json circuit_to_json(const SigmaPiSigma& c);
SigmaPiSigma circuit_from_json(const json& j);

json numeric_circuit_to_json(const NumericCircuit& c);
NumericCircuit numeric_circuit_from_json(const json& j);

json table_to_json(const TruthTable& t);
TruthTable table_from_json(const json& j);

Formula::Ptr formula_from_json(const json& j);

json graph_to_json(const GraphSet& g);
GraphSet graph_from_json(const json& j);

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json univariate_to_json(const UnivariateInL& q);

json monomial_to_json(Monomial m);
Monomial monomial_from_json(const json& j);

// Parses text that is either inline JSON or a path to a JSON file.
json parse_json_arg(const std::string& text);

}  // namespace pdeforge

// pdeforge command-line interface. Talks to the core exclusively through the
// C API in pdeforge/pdeforge.h; every subcommand reads/writes JSON.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "pdeforge/pdeforge.h"

using json = nlohmann::json;

namespace {

int exit_code_of(pdf_status status) {
  switch (status) {
    case PDF_OK: return 0;
    case PDF_E_VERIFY: return 1;
    default: return 2;
  }
}

const char* status_name(pdf_status status) {
  switch (status) {
    case PDF_OK: return "ok";
    case PDF_E_VERIFY: return "verify-mismatch";
    case PDF_E_USAGE: return "usage";
    case PDF_E_RING: return "incompatible-ring";
    case PDF_E_GUARD: return "size-guard";
    case PDF_E_PRECONDITION: return "precondition";
    case PDF_E_INVALID_PDE: return "invalid-pde";
    case PDF_E_PARSE: return "parse";
    case PDF_E_NOCONV: return "non-convergence";
    case PDF_E_INTERNAL: return "internal";
  }
  return "unknown";
}

[[noreturn]] void fail(pdf_status status) {
  json err{{"schema", "pdeforge/error/v1"},
           {"kind", status_name(status)},
           {"message", pdf_last_error()}};
  std::cout << err.dump() << "\n";
  std::exit(exit_code_of(status) == 0 ? 2 : exit_code_of(status));
}

void require_ok(pdf_status status) {
  if (status != PDF_OK) fail(status);
}

// Inline JSON or a path to a JSON file, returned as a compact JSON string.
std::string load_json_arg(const std::string& text) {
  std::string body = text;
  size_t start = body.find_first_not_of(" \t\n");
  if (start != std::string::npos &&
      (body[start] == '{' || body[start] == '[' || body[start] == '"')) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded()) {
      std::cout << json{{"schema", "pdeforge/error/v1"},
                        {"kind", "parse"},
                        {"message", "malformed inline JSON"}}
                       .dump()
                << "\n";
      std::exit(2);
    }
    return j.dump();
  }
  std::ifstream in(text);
  if (!in) {
    std::cout << json{{"schema", "pdeforge/error/v1"},
                      {"kind", "parse"},
                      {"message", "cannot open file '" + text + "'"}}
                     .dump()
              << "\n";
    std::exit(2);
  }
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    std::cout << json{{"schema", "pdeforge/error/v1"},
                      {"kind", "parse"},
                      {"message", "malformed JSON in '" + text + "'"}}
                     .dump()
              << "\n";
    std::exit(2);
  }
  return j.dump();
}

std::vector<unsigned> parse_index_set(const std::string& text) {
  json j = json::parse(load_json_arg(text));
  return j.get<std::vector<unsigned>>();
}

template <typename Fn>
std::string call_string(Fn&& fn) {
  char* s = nullptr;
  require_ok(fn(&s));
  std::string out = s ? s : "";
  pdf_string_free(s);
  return out;
}

void emit(const std::string& schema, json payload) {
  payload["schema"] = "pdeforge/" + schema + "/v1";
  std::cout << payload.dump(2) << "\n";
}

struct PolyHandle {
  pdf_poly* p = nullptr;
  ~PolyHandle() { pdf_poly_free(p); }
  json to_json() const {
    return json::parse(call_string([&](char** s) { return pdf_poly_to_json(p, s); }));
  }
};

struct CircuitHandle {
  pdf_circuit* c = nullptr;
  ~CircuitHandle() { pdf_circuit_free(c); }
  json to_json() const {
    return json::parse(call_string([&](char** s) { return pdf_circuit_to_json(c, s); }));
  }
};

void validate_thread_cap() {
  const char* env = std::getenv("PDEFORGE_THREADS");
  if (!env) return;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    std::cout << json{{"schema", "pdeforge/error/v1"},
                      {"kind", "usage"},
                      {"message", "PDEFORGE_THREADS must be a positive integer"}}
                     .dump()
              << "\n";
    std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  validate_thread_cap();

  CLI::App app{"exact construction and verification of partial differential encodings"};
  app.require_subcommand(1);

  // interpolate
  std::string arg_table, arg_method = "sumproduct", arg_ring = "q";
  auto* cmd_interpolate = app.add_subcommand("interpolate", "truth table -> PDE polynomial");
  cmd_interpolate->add_option("--table", arg_table, "truth table JSON or file")->required();
  cmd_interpolate->add_option("--method", arg_method, "sumproduct | binary");
  cmd_interpolate->add_option("--ring", arg_ring, "q | gf2");

  // boole
  std::string arg_formula;
  unsigned arg_nvars = 0;
  auto* cmd_boole = app.add_subcommand("boole", "De Morgan formula -> polynomial");
  cmd_boole->add_option("--formula", arg_formula, "formula JSON or file")->required();
  cmd_boole->add_option("--n", arg_nvars, "variable count")->required();

  // pde-eval
  std::string arg_poly, arg_subset;
  unsigned long arg_m = 1;
  auto* cmd_eval = app.add_subcommand("pde-eval", "evaluate a PDE on a subset");
  cmd_eval->add_option("--poly", arg_poly, "polynomial JSON or file")->required();
  cmd_eval->add_option("--subset", arg_subset, "JSON index array, e.g. [0,1]")->required();
  cmd_eval->add_option("--m", arg_m, "PDE exponent (default 1)");

  // pde-verify
  std::string arg_vpoly, arg_vtable;
  unsigned long arg_vm = 1;
  auto* cmd_verify = app.add_subcommand("pde-verify", "exhaustive PDE check against a table");
  cmd_verify->add_option("--poly", arg_vpoly)->required();
  cmd_verify->add_option("--table", arg_vtable)->required();
  cmd_verify->add_option("--m", arg_vm);

  // circuit
  std::string arg_cop, arg_cset, arg_cpoly, arg_ccircuit;
  unsigned arg_cn = 0;
  bool arg_raw = false;
  auto* cmd_circuit = app.add_subcommand("circuit", "hypermatrix constructions and expansion");
  cmd_circuit->add_option("--op", arg_cop, "subset | superset | trivial | expand | size")
      ->required();
  cmd_circuit->add_option("--set", arg_cset, "JSON index array for subset/superset");
  cmd_circuit->add_option("--n", arg_cn, "variable count for subset/superset");
  cmd_circuit->add_option("--poly", arg_cpoly, "polynomial for trivial");
  cmd_circuit->add_option("--circuit", arg_ccircuit, "circuit for expand/size");
  cmd_circuit->add_flag("--raw", arg_raw, "expand without reduction");

  // pdp-search
  std::string arg_target, arg_fixed;
  unsigned arg_rho = 1, arg_d = 1, arg_seeds = 8;
  double arg_tol = 1e-9;
  unsigned long arg_seed = 0;
  auto* cmd_search = app.add_subcommand("pdp-search", "numeric circuit fit to a polynomial");
  cmd_search->add_option("--target", arg_target)->required();
  cmd_search->add_option("--rho", arg_rho)->required();
  cmd_search->add_option("--d", arg_d)->required();
  cmd_search->add_option("--seeds", arg_seeds);
  cmd_search->add_option("--tol", arg_tol);
  cmd_search->add_option("--seed", arg_seed);
  cmd_search->add_option("--fixed", arg_fixed, "JSON array of {u,v,w,value}");

  // cardinality
  std::string arg_kind;
  unsigned arg_s = 0, arg_cardn = 0;
  bool arg_roots = false;
  auto* cmd_card = app.add_subcommand("cardinality", "threshold PDPs in the binomial basis");
  cmd_card->add_option("--kind", arg_kind, "le | ge | eq")->required();
  cmd_card->add_option("--s", arg_s)->required();
  cmd_card->add_option("--n", arg_cardn)->required();
  cmd_card->add_flag("--roots", arg_roots, "include numeric roots");

  // orbit
  std::string arg_graph, arg_what = "orbit";
  auto* cmd_orbit = app.add_subcommand("orbit", "orbits, automorphisms, classes, counts");
  cmd_orbit->add_option("--graph", arg_graph)->required();
  cmd_orbit->add_option("--what", arg_what,
                        "orbit | automorphisms | classes | polya | polynomial");

  // iso-pde
  std::string arg_ikind, arg_sgraph, arg_tgraph;
  unsigned long arg_im = 1;
  auto* cmd_iso = app.add_subcommand("iso-pde", "isomorphism-variant PDE evaluation");
  cmd_iso->add_option("--kind", arg_ikind, "iso | sub | super")->required();
  cmd_iso->add_option("--s-graph", arg_sgraph)->required();
  cmd_iso->add_option("--t-graph", arg_tgraph)->required();
  cmd_iso->add_option("--m", arg_im);

  // certificate
  std::string arg_csg, arg_ctg;
  auto* cmd_cert = app.add_subcommand("certificate", "permutation-matrix certificates");
  cmd_cert->add_option("--s-graph", arg_csg)->required();
  cmd_cert->add_option("--t-graph", arg_ctg)->required();

  // bounds
  std::string arg_bgraph, arg_bkind = "iso";
  unsigned arg_brho = 0, arg_bd = 0;
  auto* cmd_bounds = app.add_subcommand("bounds", "Legendre bound and constraint counts");
  cmd_bounds->add_option("--graph", arg_bgraph)->required();
  cmd_bounds->add_option("--kind", arg_bkind, "iso | sub | super");
  cmd_bounds->add_option("--rho", arg_brho);
  cmd_bounds->add_option("--d", arg_bd);

  // prop3-verify
  unsigned arg_p3n = 3;
  std::string arg_p3set = "[]";
  auto* cmd_p3 = app.add_subcommand("prop3-verify", "literal orbit-list verification");
  cmd_p3->add_option("--nvars", arg_p3n)->required();
  cmd_p3->add_option("--subset", arg_p3set, "JSON index array");

  // resolvent-check
  std::string arg_rgraph;
  unsigned arg_tmax = 2;
  auto* cmd_res = app.add_subcommand("resolvent-check", "binomial fit of e_t over cosets");
  cmd_res->add_option("--graph", arg_rgraph)->required();
  cmd_res->add_option("--tmax", arg_tmax);

  // det / perm / ftree / fcycles
  std::string arg_matrix, arg_dmethod = "grassmann";
  auto* cmd_det = app.add_subcommand("det", "exact determinant");
  cmd_det->add_option("--matrix", arg_matrix)->required();
  cmd_det->add_option("--method", arg_dmethod,
                      "grassmann | grassmann-literal | vandermonde | cofactor");
  std::string arg_pmatrix;
  auto* cmd_perm = app.add_subcommand("perm", "exact permanent");
  cmd_perm->add_option("--matrix", arg_pmatrix)->required();
  std::string arg_tmatrix;
  auto* cmd_ftree = app.add_subcommand("ftree", "functional-tree indicator");
  cmd_ftree->add_option("--matrix", arg_tmatrix)->required();
  std::string arg_cmatrix;
  auto* cmd_fcycles = app.add_subcommand("fcycles", "cycle-cover indicator");
  cmd_fcycles->add_option("--matrix", arg_cmatrix)->required();

  // fdet2
  std::string arg_bits;
  auto* cmd_fdet2 = app.add_subcommand("fdet2", "GF(2) invertibility indicator");
  cmd_fdet2->add_option("--bits", arg_bits, "row-major n^2 bit string")->required();

  // roots-transcendental
  unsigned arg_rd = 2;
  double arg_rtol = 1e-9, arg_rstep = 0.01;
  auto* cmd_roots = app.add_subcommand("roots-transcendental", "integer-roots circuit check");
  cmd_roots->add_option("--d", arg_rd)->required();
  cmd_roots->add_option("--tol", arg_rtol);
  cmd_roots->add_option("--grid-step", arg_rstep);

  // selftest
  std::string arg_suite = "quick";
  unsigned long arg_stseed = 0;
  auto* cmd_selftest = app.add_subcommand("selftest", "bundled verification suite");
  cmd_selftest->add_option("--suite", arg_suite, "quick | full");
  cmd_selftest->add_option("--seed", arg_stseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err{{"schema", "pdeforge/error/v1"}, {"kind", "usage"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  }

  if (cmd_interpolate->parsed()) {
    PolyHandle poly;
    require_ok(pdf_interpolate(load_json_arg(arg_table).c_str(), arg_method.c_str(),
                               arg_ring.c_str(), &poly.p));
    emit("interpolate", {{"method", arg_method}, {"polynomial", poly.to_json()}});
    return 0;
  }

  if (cmd_boole->parsed()) {
    PolyHandle poly;
    require_ok(pdf_boole_encode(load_json_arg(arg_formula).c_str(), arg_nvars, &poly.p));
    emit("boole", {{"polynomial", poly.to_json()}});
    return 0;
  }

  if (cmd_eval->parsed()) {
    PolyHandle poly;
    require_ok(pdf_poly_from_json(load_json_arg(arg_poly).c_str(), &poly.p));
    std::vector<unsigned> subset = parse_index_set(arg_subset);
    int bit = 0;
    require_ok(pdf_pde_evaluate(poly.p, subset.data(), subset.size(), arg_m, &bit));
    emit("pde-eval", {{"subset", subset}, {"m", arg_m}, {"bit", bit}});
    return 0;
  }

  if (cmd_verify->parsed()) {
    PolyHandle poly;
    require_ok(pdf_poly_from_json(load_json_arg(arg_vpoly).c_str(), &poly.p));
    std::string table = load_json_arg(arg_vtable);
    json r = json::parse(call_string(
        [&](char** s) { return pdf_pde_verify(poly.p, table.c_str(), arg_vm, s); }));
    emit("pde-verify", {{"pass", r.at("pass")}, {"mismatches", r.at("mismatches")}});
    return r.at("pass").get<bool>() ? 0 : 1;
  }

  if (cmd_circuit->parsed()) {
    if (arg_cop == "subset" || arg_cop == "superset") {
      std::vector<unsigned> s = parse_index_set(arg_cset.empty() ? "[]" : arg_cset);
      CircuitHandle c;
      require_ok(arg_cop == "subset"
                     ? pdf_circuit_subset_product(s.data(), s.size(), arg_cn, &c.c)
                     : pdf_circuit_superset_product(s.data(), s.size(), arg_cn, &c.c));
      json sj = json::parse(
          call_string([&](char** s) { return pdf_circuit_size_report(c.c, s); }));
      emit("circuit", {{"op", arg_cop}, {"circuit", c.to_json()}, {"size", sj}});
      return 0;
    }
    if (arg_cop == "trivial") {
      PolyHandle poly;
      require_ok(pdf_poly_from_json(load_json_arg(arg_cpoly).c_str(), &poly.p));
      CircuitHandle c;
      require_ok(pdf_circuit_trivial(poly.p, &c.c));
      json sj = json::parse(
          call_string([&](char** s) { return pdf_circuit_size_report(c.c, s); }));
      emit("circuit", {{"op", arg_cop}, {"circuit", c.to_json()}, {"size", sj}});
      return 0;
    }
    if (arg_cop == "expand") {
      CircuitHandle c;
      require_ok(pdf_circuit_from_json(load_json_arg(arg_ccircuit).c_str(), &c.c));
      PolyHandle poly;
      require_ok(pdf_circuit_expand(c.c, arg_raw ? 0 : 1, &poly.p));
      emit("circuit", {{"op", "expand"}, {"reduced", !arg_raw}, {"polynomial", poly.to_json()}});
      return 0;
    }
    if (arg_cop == "size") {
      CircuitHandle c;
      require_ok(pdf_circuit_from_json(load_json_arg(arg_ccircuit).c_str(), &c.c));
      json sj = json::parse(
          call_string([&](char** s) { return pdf_circuit_size_report(c.c, s); }));
      emit("circuit", {{"op", "size"}, {"size", sj}});
      return 0;
    }
    json err{{"schema", "pdeforge/error/v1"},
             {"kind", "usage"},
             {"message", "--op must be subset|superset|trivial|expand|size"}};
    std::cout << err.dump() << "\n";
    return 2;
  }

  if (cmd_search->parsed()) {
    json req{{"target", json::parse(load_json_arg(arg_target))},
             {"rho", arg_rho},
             {"d", arg_d},
             {"seeds", arg_seeds},
             {"tol", arg_tol},
             {"seed", arg_seed}};
    if (!arg_fixed.empty()) req["fixed"] = json::parse(load_json_arg(arg_fixed));
    std::string request = req.dump();
    json r = json::parse(
        call_string([&](char** s) { return pdf_pdp_search(request.c_str(), s); }));
    emit("pdp-search", r);
    return 0;
  }

  if (cmd_card->parsed()) {
    json r = json::parse(call_string([&](char** s) {
      return pdf_cardinality(arg_kind.c_str(), arg_s, arg_cardn, arg_roots ? 1 : 0, s);
    }));
    emit("cardinality", r);
    return 0;
  }

  if (cmd_orbit->parsed()) {
    std::string graph = load_json_arg(arg_graph);
    json r = json::parse(call_string(
        [&](char** s) { return pdf_orbit_query(graph.c_str(), arg_what.c_str(), s); }));
    emit("orbit", r);
    return 0;
  }

  if (cmd_iso->parsed()) {
    int bit = 0;
    require_ok(pdf_iso_pde(arg_ikind.c_str(), load_json_arg(arg_sgraph).c_str(),
                           load_json_arg(arg_tgraph).c_str(), arg_im, &bit));
    emit("iso-pde", {{"kind", arg_ikind}, {"bit", bit}});
    return 0;
  }

  if (cmd_cert->parsed()) {
    std::string sg = load_json_arg(arg_csg), tg = load_json_arg(arg_ctg);
    json r = json::parse(call_string(
        [&](char** s) { return pdf_np_certificate(sg.c_str(), tg.c_str(), s); }));
    emit("certificate", r);
    return 0;
  }

  if (cmd_bounds->parsed()) {
    json req{{"graph", json::parse(load_json_arg(arg_bgraph))}, {"kind", arg_bkind}};
    if (cmd_bounds->count("--rho") && cmd_bounds->count("--d")) {
      req["rho"] = arg_brho;
      req["d"] = arg_bd;
    }
    std::string request = req.dump();
    json r = json::parse(call_string([&](char** s) { return pdf_bounds(request.c_str(), s); }));
    emit("bounds", r);
    return 0;
  }

  if (cmd_p3->parsed()) {
    std::vector<unsigned> subset = parse_index_set(arg_p3set);
    json r = json::parse(call_string(
        [&](char** s) { return pdf_prop3_verify(arg_p3n, subset.data(), subset.size(), s); }));
    emit("prop3-verify", r);
    return r.at("pass").get<bool>() ? 0 : 1;
  }

  if (cmd_res->parsed()) {
    std::string graph = load_json_arg(arg_rgraph);
    json r = json::parse(call_string(
        [&](char** s) { return pdf_resolvent_check(graph.c_str(), arg_tmax, s); }));
    emit("resolvent-check", r);
    return r.at("pass").get<bool>() ? 0 : 1;
  }

  if (cmd_det->parsed()) {
    std::string matrix = load_json_arg(arg_matrix);
    std::string value = call_string(
        [&](char** s) { return pdf_det(matrix.c_str(), arg_dmethod.c_str(), s); });
    emit("det", {{"method", arg_dmethod}, {"value", value}});
    return 0;
  }

  if (cmd_perm->parsed()) {
    std::string matrix = load_json_arg(arg_pmatrix);
    std::string value = call_string([&](char** s) { return pdf_perm(matrix.c_str(), s); });
    emit("perm", {{"value", value}});
    return 0;
  }

  if (cmd_ftree->parsed()) {
    int bit = 0;
    require_ok(pdf_ftree(load_json_arg(arg_tmatrix).c_str(), &bit));
    emit("ftree", {{"bit", bit}});
    return 0;
  }

  if (cmd_fcycles->parsed()) {
    int bit = 0;
    require_ok(pdf_fcycles(load_json_arg(arg_cmatrix).c_str(), &bit));
    emit("fcycles", {{"bit", bit}});
    return 0;
  }

  if (cmd_fdet2->parsed()) {
    int bit = 0;
    require_ok(pdf_fdet2(arg_bits.c_str(), &bit));
    emit("fdet2", {{"bits", arg_bits}, {"bit", bit}});
    return 0;
  }

  if (cmd_roots->parsed()) {
    json r = json::parse(call_string(
        [&](char** s) { return pdf_roots_transcendental(arg_rd, arg_rtol, arg_rstep, s); }));
    emit("roots-transcendental", r);
    return r.at("pass").get<bool>() ? 0 : 1;
  }

  if (cmd_selftest->parsed()) {
    char* out = nullptr;
    pdf_status status = pdf_selftest(arg_suite.c_str(), arg_stseed, &out);
    if (status != PDF_OK && status != PDF_E_VERIFY) fail(status);
    json r = json::parse(out ? out : "{}");
    pdf_string_free(out);
    for (const auto& item : r.at("results"))
      std::cerr << (item.at("pass").get<bool>() ? "[ pass ]" : "[ FAIL ]") << " criterion "
                << item.at("id").get<int>() << ": " << item.at("name").get<std::string>() << " ("
                << item.at("millis").get<double>() << " ms)\n";
    emit("selftest", r);
    return r.at("pass").get<bool>() ? 0 : 1;
  }

  return 2;
}

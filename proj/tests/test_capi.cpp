// Exercises the shared-library surface exactly as an external consumer
// would: through pdeforge/pdeforge.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <string>

#include "pdeforge/pdeforge.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pdf_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("interpolation and PDE evaluation round trip") {
    pdf_poly* poly = nullptr;
    REQUIRE(pdf_interpolate(R"({"n":2,"bits":"1101"})", "sumproduct", "q", &poly) == PDF_OK);
    char* text = nullptr;
    REQUIRE(pdf_poly_to_json(poly, &text) == PDF_OK);
    json j = json::parse(take(text));
    CHECK(j.at("terms").size() == 3);

    int bit = -1;
    unsigned both[2] = {0, 1};
    REQUIRE(pdf_pde_evaluate(poly, both, 2, 1, &bit) == PDF_OK);
    CHECK(bit == 1);
    unsigned x1[1] = {1};
    REQUIRE(pdf_pde_evaluate(poly, x1, 1, 1, &bit) == PDF_OK);
    CHECK(bit == 0);

    char* report = nullptr;
    REQUIRE(pdf_pde_verify(poly, R"({"n":2,"bits":"1101"})", 1, &report) == PDF_OK);
    CHECK(json::parse(take(report)).at("pass").get<bool>());
    pdf_poly_free(poly);
  }

  TEST_CASE("binary method matches over GF(2)") {
    pdf_poly* a = nullptr;
    pdf_poly* b = nullptr;
    REQUIRE(pdf_interpolate(R"({"n":2,"bits":"0110"})", "binary", nullptr, &a) == PDF_OK);
    REQUIRE(pdf_interpolate(R"({"n":2,"bits":"0110"})", "sumproduct", "gf2", &b) == PDF_OK);
    char* sa = nullptr;
    char* sb = nullptr;
    REQUIRE(pdf_poly_to_json(a, &sa) == PDF_OK);
    REQUIRE(pdf_poly_to_json(b, &sb) == PDF_OK);
    CHECK(json::parse(take(sa)) == json::parse(take(sb)));
    pdf_poly_free(a);
    pdf_poly_free(b);
  }

  TEST_CASE("error paths set codes and messages") {
    pdf_poly* poly = nullptr;
    CHECK(pdf_interpolate(R"({"n":2,"bits":"1101"})", "nope", "q", &poly) == PDF_E_USAGE);
    CHECK(std::string(pdf_last_error()).find("sumproduct") != std::string::npos);
    CHECK(pdf_poly_from_json("{broken", &poly) == PDF_E_PARSE);
    CHECK(pdf_interpolate(R"({"n":9,"bits":"00"})", "sumproduct", "q", &poly) == PDF_E_PRECONDITION);
    CHECK(pdf_det(R"({"n":2,"entries":[["1","0"],["0","1"]]})", "vandermonde", nullptr) ==
          PDF_E_USAGE);
    char* out = nullptr;
    CHECK(pdf_det(R"({"n":2,"entries":[["1","0"],["0","1"]]})", "vandermonde", &out) ==
          PDF_E_PRECONDITION);
  }

  TEST_CASE("circuit handles") {
    unsigned s[2] = {0, 1};
    pdf_circuit* c = nullptr;
    REQUIRE(pdf_circuit_subset_product(s, 2, 5, &c) == PDF_OK);
    char* size = nullptr;
    REQUIRE(pdf_circuit_size_report(c, &size) == PDF_OK);
    json sj = json::parse(take(size));
    CHECK(sj.at("product").get<unsigned>() == 1 * 2 * 6);
    pdf_poly* expanded = nullptr;
    REQUIRE(pdf_circuit_expand(c, 1, &expanded) == PDF_OK);
    char* text = nullptr;
    REQUIRE(pdf_poly_to_json(expanded, &text) == PDF_OK);
    CHECK(json::parse(take(text)).at("terms").size() == 4);
    pdf_poly_free(expanded);

    pdf_circuit* trivial = nullptr;
    pdf_poly* again = nullptr;
    REQUIRE(pdf_circuit_expand(c, 1, &again) == PDF_OK);
    REQUIRE(pdf_circuit_trivial(again, &trivial) == PDF_OK);
    char* tsize = nullptr;
    REQUIRE(pdf_circuit_size_report(trivial, &tsize) == PDF_OK);
    CHECK(json::parse(take(tsize)).at("rho").get<unsigned>() == 4);
    pdf_poly_free(again);
    pdf_circuit_free(trivial);
    pdf_circuit_free(c);
  }

  TEST_CASE("determinant, permanent and the indicator functions") {
    char* v = nullptr;
    REQUIRE(pdf_det(R"({"n":2,"entries":[["0","1"],["1","0"]]})", "grassmann", &v) == PDF_OK);
    CHECK(take(v) == "-1");
    REQUIRE(pdf_perm(R"({"n":2,"entries":[["1","1"],["1","1"]]})", &v) == PDF_OK);
    CHECK(take(v) == "2");

    int bit = -1;
    REQUIRE(pdf_fdet2("1001", &bit) == PDF_OK);
    CHECK(bit == 1);
    CHECK(pdf_fdet2("10011", &bit) == PDF_E_USAGE);

    REQUIRE(pdf_ftree(R"({"n":2,"entries":[[0,1],[0,1]]})", &bit) == PDF_OK);
    CHECK(bit == 1);
    REQUIRE(pdf_fcycles(R"({"n":2,"entries":[[0,1],[1,0]]})", &bit) == PDF_OK);
    CHECK(bit == 1);
  }

  TEST_CASE("orbit queries and certificates") {
    char* out = nullptr;
    REQUIRE(pdf_orbit_query(R"({"n":3,"edges":[[0,1]]})", "orbit", &out) == PDF_OK);
    CHECK(json::parse(take(out)).at("size").get<unsigned>() == 6);
    REQUIRE(pdf_orbit_query(R"({"n":3,"edges":[]})", "polya", &out) == PDF_OK);
    CHECK(json::parse(take(out)).at("classes").get<std::string>() == "16");

    int bit = -1;
    REQUIRE(pdf_iso_pde("iso", R"({"n":3,"edges":[[0,1],[1,2]]})",
                        R"({"n":3,"edges":[[2,1],[1,0]]})", 1, &bit) == PDF_OK);
    CHECK(bit == 1);

    REQUIRE(pdf_np_certificate(R"({"n":3,"edges":[[0,1]]})", R"({"n":3,"edges":[[1,2]]})",
                               &out) == PDF_OK);
    json cert = json::parse(take(out));
    CHECK(cert.at("certificate").get<std::string>() == "98");
    CHECK(cert.at("permutation") == json::array({1, 2, 0}));
  }

  TEST_CASE("polynomial JSON round trips, including cyclotomic coefficients") {
    const char* text = R"({"n":2,"ring":{"cyclotomic":4},
      "terms":[{"vars":[0],"coeff":{"m":4,"coeffs":["0","1","0","0"]}},
               {"vars":[0,1],"coeff":{"m":4,"coeffs":["-1/2","0","0","0"]}}]})";
    pdf_poly* p = nullptr;
    REQUIRE(pdf_poly_from_json(text, &p) == PDF_OK);
    char* out = nullptr;
    REQUIRE(pdf_poly_to_json(p, &out) == PDF_OK);
    json j = json::parse(take(out));
    pdf_poly* q = nullptr;
    REQUIRE(pdf_poly_from_json(j.dump().c_str(), &q) == PDF_OK);
    char* out2 = nullptr;
    REQUIRE(pdf_poly_to_json(q, &out2) == PDF_OK);
    CHECK(json::parse(take(out2)) == j);
    pdf_poly_free(p);
    pdf_poly_free(q);
  }

  TEST_CASE("quick selftest passes through the C surface") {
    char* out = nullptr;
    REQUIRE(pdf_selftest("quick", 0, &out) == PDF_OK);
    json report = json::parse(take(out));
    CHECK(report.at("pass").get<bool>());
    CHECK(report.at("results").size() == 18);
  }
}

#include <doctest.h>

#include <random>

#include "pdeforge/oracles.hpp"
#include "pdeforge/symmetric.hpp"

using namespace pdeforge;

TEST_SUITE("symmetric") {
  TEST_CASE("elementary symmetric polynomials") {
    MLPoly e2 = elementary_symmetric(3, 2);
    CHECK(e2.term_count() == 3);
    CHECK(e2.coefficient(Monomial{0b011}).is_one());
    CHECK(e2.coefficient(Monomial{0b101}).is_one());
    CHECK(e2.coefficient(Monomial{0b110}).is_one());
    CHECK(elementary_symmetric(4, 0) == MLPoly::one(4, kRationalRing));
    CHECK(elementary_symmetric(4, 4).term_count() == 1);
    CHECK_THROWS_AS(elementary_symmetric(3, 4), Error);
  }

  TEST_CASE("Newton coefficients for small degrees") {
    auto t1 = newton_e_from_p(1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].coeff == 1);  // e1 = p1

    // e2 = (p1^2 - p2) / 2
    auto t2 = newton_e_from_p(2);
    REQUIRE(t2.size() == 2);
    for (const auto& term : t2) {
      if (term.multiplicities[0] == 2) CHECK(term.coeff == mpq_class(1, 2));
      else CHECK(term.coeff == mpq_class(-1, 2));
    }

    // e3 = (p1^3 - 3 p1 p2 + 2 p3) / 6
    auto t3 = newton_e_from_p(3);
    REQUIRE(t3.size() == 3);
    for (const auto& term : t3) {
      if (term.multiplicities[0] == 3) CHECK(term.coeff == mpq_class(1, 6));
      else if (term.multiplicities[2] == 1) CHECK(term.coeff == mpq_class(1, 3));
      else CHECK(term.coeff == mpq_class(-1, 2));
    }
  }

  TEST_CASE("binomial-basis expansion of e_t") {
    UnivariateInL q = e_to_binomial(3, 2);
    CHECK(q.to_mlpoly_via_powers() == elementary_symmetric(3, 2));
    CHECK(e_to_binomial(4, 1).to_mlpoly_via_powers() == elementary_symmetric(4, 1));
    CHECK(e_to_binomial(4, 0).to_mlpoly() == MLPoly::one(4, kRationalRing));

    // monomial basis of C(ell,2) is (ell^2 - ell)/2
    auto mono = e_to_binomial(5, 2).monomial_basis();
    REQUIRE(mono.size() == 3);
    CHECK(mono[0] == 0);
    CHECK(mono[1] == mpq_class(-1, 2));
    CHECK(mono[2] == mpq_class(1, 2));
  }

  TEST_CASE("consistency square on random binomial vectors") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      unsigned n = 2 + static_cast<unsigned>(rng() % 7);  // up to 8
      UnivariateInL q;
      q.nvars = n;
      q.binom.resize(1 + rng() % (n + 1));
      for (auto& a : q.binom) a = coeff(rng);
      CHECK(q.to_mlpoly() == q.to_mlpoly_via_powers());
    }
  }

  TEST_CASE("cardinality PDP shapes") {
    UnivariateInL le1 = cardinality_pdp(CardinalityKind::LessEq, 1, 4);
    CHECK(le1.binom == std::vector<mpq_class>{1, 1});
    auto mono = le1.monomial_basis();
    CHECK(mono == std::vector<mpq_class>{1, 1});  // 1 + ell

    UnivariateInL ge1 = cardinality_pdp(CardinalityKind::GreaterEq, 1, 4);
    CHECK(ge1.binom.size() == 5);
    CHECK(ge1.binom[0] == 0);
    for (unsigned t = 1; t <= 4; ++t) CHECK(ge1.binom[t] == 1);

    UnivariateInL le3 = cardinality_pdp(CardinalityKind::LessEq, 3, 4);
    CHECK(le3.binom == std::vector<mpq_class>{1, 1, 1, 1});

    CHECK_THROWS_AS(cardinality_pdp(CardinalityKind::Equal, 5, 4), Error);
  }

  TEST_CASE("cardinality evaluation via the binomial shortcut") {
    UnivariateInL q = cardinality_pdp(CardinalityKind::LessEq, 2, 5);
    CHECK(pdp_evaluate_cardinality(q, Monomial{0b00011}) == 1);
    CHECK(pdp_evaluate_cardinality(q, Monomial{0b00111}) == 0);
    UnivariateInL eq0 = cardinality_pdp(CardinalityKind::Equal, 0, 5);
    CHECK(pdp_evaluate_cardinality(eq0, Monomial::empty()) == 1);

    UnivariateInL bad;
    bad.nvars = 2;
    bad.binom = {mpq_class(2)};
    CHECK_THROWS_AS(pdp_evaluate_cardinality(bad, Monomial::empty()), Error);
  }

  TEST_CASE("ge-kind degree matches the variable count") {
    // The ge polynomial has degree N even though the paper sizes its
    // hypermatrix by |S|; the degree is what the basis stores.
    UnivariateInL ge = cardinality_pdp(CardinalityKind::GreaterEq, 2, 6);
    CHECK(ge.degree() == 6);
    UnivariateInL le = cardinality_pdp(CardinalityKind::LessEq, 2, 6);
    CHECK(le.degree() == 2);
  }

  TEST_CASE("numeric roots of the equality kind are 0..s-1") {
    RootsReport r2 = factor_roots(cardinality_pdp(CardinalityKind::Equal, 2, 6));
    REQUIRE(r2.roots.size() == 2);
    CHECK(r2.roots[0].real() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r2.roots[1].real() == doctest::Approx(1.0).epsilon(1e-9));

    RootsReport r3 = factor_roots(cardinality_pdp(CardinalityKind::Equal, 3, 6));
    REQUIRE(r3.roots.size() == 3);
    CHECK(r3.roots[2].real() == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("roots reconstruct the monomial coefficients") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
      unsigned n = 3 + static_cast<unsigned>(rng() % 4);
      UnivariateInL q;
      q.nvars = n;
      q.binom.assign(n + 1, 0);
      for (auto& a : q.binom) a = coeff(rng);
      if (q.binom.back() == 0) q.binom.back() = 1;
      RootsReport r = factor_roots(q, 1e-9);
      auto mono = q.monomial_basis();
      // multiply out leading * prod (ell - root)
      std::vector<std::complex<double>> poly{1.0};
      for (const auto& root : r.roots) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] += poly[i];
          next[i] -= poly[i] * root;
        }
        poly = std::move(next);
      }
      for (size_t k = 0; k < poly.size(); ++k) {
        double want = mono[k].get_d();
        double got = (poly[k] * r.leading).real();
        CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
      }
    }
  }

  TEST_CASE("le with s=2 over four variables has two well-conditioned roots") {
    RootsReport r = factor_roots(cardinality_pdp(CardinalityKind::LessEq, 2, 4), 1e-9);
    CHECK(r.roots.size() == 2);
    CHECK(r.max_residual < 1e-9);
  }
}

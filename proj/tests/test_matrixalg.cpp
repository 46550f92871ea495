#include <doctest.h>

#include <random>

#include "pdeforge/circuit.hpp"
#include "pdeforge/matrixalg.hpp"
#include "pdeforge/oracles.hpp"
#include "pdeforge/orbits.hpp"
#include "pdeforge/symmetric.hpp"

using namespace pdeforge;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, unsigned n, bool nonzero_first_col) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  ExactMatrix m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      int p = num(rng);
      while (nonzero_first_col && j == 0 && p == 0) p = num(rng);
      m.at(i, j) = mpq_class(p, den(rng));
      m.at(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_SUITE("matrixalg") {
  TEST_CASE("ladder generators") {
    auto theta0 = grassmann_theta(0, 1);
    REQUIRE(theta0.size() == 4);
    CHECK(theta0[1 * 2 + 0] == 1);  // a = [[0,0],[1,0]]
    CHECK(theta0[0] == 0);

    // n=2: theta0 * theta1 = a (x) a, a single 1 at entry (3, 0).
    auto t0 = grassmann_theta(0, 2);
    auto t1 = grassmann_theta(1, 2);
    int prod[16] = {0};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) prod[i * 4 + j] += t0[i * 4 + k] * t1[k * 4 + j];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(prod[i * 4 + j] == (i == 3 && j == 0 ? 1 : 0));

    for (unsigned n = 1; n <= 4; ++n) grassmann_verify_literal(n);
  }

  TEST_CASE("Grassmann determinant in both modes") {
    CHECK(det_grassmann(ExactMatrix::identity(3)) == 1);
    ExactMatrix swap2(2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(det_grassmann(swap2, GrassmannMode::Exterior) == -1);
    CHECK(det_grassmann(swap2, GrassmannMode::Literal) == -1);

    std::mt19937_64 rng(61);
    for (unsigned n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix a = random_matrix(rng, n, false);
        mpq_class want = oracles::det_cofactor(a);
        CHECK(det_grassmann(a, GrassmannMode::Exterior) == want);
        CHECK(det_grassmann(a, GrassmannMode::Literal) == want);
      }
    CHECK_THROWS_AS(det_grassmann(ExactMatrix::identity(7), GrassmannMode::Literal), Error);
  }

  TEST_CASE("Vandermonde-reduction determinant") {
    ExactMatrix a(2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    CHECK(det_vandermonde(a) == 5);

    CHECK_THROWS_AS(det_vandermonde(ExactMatrix::identity(2)), Error);

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
      ExactMatrix m = random_matrix(rng, 4, true);
      CHECK(det_vandermonde(m) == oracles::det_cofactor(m));
    }
  }

  TEST_CASE("permanent by subset dynamic programming") {
    ExactMatrix ones(3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) ones.at(i, j) = 1;
    CHECK(permanent(ones) == 6);
    CHECK(permanent(ExactMatrix::identity(4)) == 1);

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      ExactMatrix m(5);
      for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) m.at(i, j) = static_cast<long>(rng() & 1);
      CHECK(permanent(m) == oracles::permanent_enumeration(m));
    }
    CHECK_THROWS_AS(permanent(ExactMatrix::identity(13)), Error);
  }

  TEST_CASE("tree polynomial") {
    // n=2: x00*x10 + x11*x01 in variables x_{2i+j}.
    MLPoly p2 = p_tree_symbolic(2);
    CHECK(p2.term_count() == 2);
    CHECK(p2.coefficient(Monomial::of(std::vector<unsigned>{0, 2})).is_one());
    CHECK(p2.coefficient(Monomial::of(std::vector<unsigned>{3, 1})).is_one());

    CHECK(p_tree_symbolic(3).term_count() == 9);
    CHECK(p_tree_symbolic(4).term_count() == 64);

    CHECK(p_tree_value(ExactMatrix(3)) == 0);

    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 8; ++trial) {
      ExactMatrix m = random_matrix(rng, 3, false);
      std::vector<RingElem> point;
      for (const auto& q : m.a) point.push_back(RingElem::rational(q));
      CHECK(p_tree_symbolic(3).evaluate(point).rational_value() == p_tree_value(m));
    }
  }

  TEST_CASE("functional tree indicator") {
    BitMatrix m(4, 0);
    m[0 * 2 + 1] = 1;  // f(0) = 1
    m[1 * 2 + 1] = 1;  // f(1) = 1
    CHECK(f_tree(m, 2) == 1);
    CHECK(f_tree(BitMatrix(4, 0), 2) == 0);

    for (uint64_t bits = 0; bits < 512; ++bits) {
      BitMatrix mm(9);
      for (unsigned i = 0; i < 9; ++i) mm[i] = (bits >> i) & 1;
      CHECK(f_tree(mm, 3) == (oracles::functional_tree(mm, 3) ? 1 : 0));
    }
  }

  TEST_CASE("cycle cover indicator") {
    BitMatrix perm(9, 0);
    perm[0 * 3 + 1] = perm[1 * 3 + 2] = perm[2 * 3 + 0] = 1;
    CHECK(f_cycles(perm, 3) == 1);
    CHECK(f_cycles(BitMatrix(9, 0), 3) == 0);
    for (uint64_t bits = 0; bits < 512; ++bits) {
      BitMatrix mm(9);
      for (unsigned i = 0; i < 9; ++i) mm[i] = (bits >> i) & 1;
      CHECK(f_cycles(mm, 3) == (oracles::permutation_matrix(mm, 3) ? 1 : 0));
    }
  }

  TEST_CASE("GF(2) determinant indicator") {
    CHECK(p_det_poly(2).term_count() == 6);
    CHECK(p_det_poly(3).term_count() == 168);
    // identity bits: entries (0,0) and (1,1) -> variables 0 and 3
    CHECK(f_det_gf2(2, 0b1001) == 1);
    CHECK(f_det_gf2(2, 0b0011) == 0);
    for (uint64_t t = 0; t < 16; ++t)
      CHECK(f_det_gf2(2, t) == (oracles::gf2_rank(2, t) == 2 ? 1 : 0));
    CHECK_THROWS_AS(p_det_poly(4), Error);
  }

  TEST_CASE("cycle-cover listing width links to the Legendre exponents") {
    // The cycle polynomial has n! terms (the permanent of the all-ones
    // matrix); the minimal single-product width is the exponent sum in the
    // factorization of n!.
    for (unsigned n = 2; n <= 6; ++n) {
      ExactMatrix ones(n);
      for (auto& x : ones.a) x = 1;
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), n);
      CHECK(permanent(ones) == mpq_class(fact));
      auto exps = oracles::factor_factorial(n);
      unsigned long width = 0;
      for (auto [p, e] : exps) width += e;
      CHECK(width == legendre_lower_bound(n).alpha_sum);
    }
  }

  TEST_CASE("trivial circuit shape of the equal-cardinality polynomial") {
    MLPoly e2 = elementary_symmetric(3, 2);
    auto report = SigmaPiSigma::trivial_circuit(e2).size_report();
    CHECK(report.rho == 3);   // C(3,2)
    CHECK(report.d == 2);
    CHECK(report.width == 4); // constant slot included by construction
  }

  TEST_CASE("transcendental integer-roots circuit") {
    RootsCheckReport r5 = integer_roots_check(5, 1e-9, 0.01);
    CHECK(r5.pass);
    CHECK(r5.max_root_abs < 1e-9);
    CHECK(r5.min_offgrid_abs > 1e-6);

    RootsCheckReport r2 = integer_roots_check(2, 1e-9, 0.01);
    CHECK(r2.pass);

    CHECK_THROWS_AS(integer_roots_check(1), Error);
    CHECK_THROWS_AS(integer_roots_check(5, 1e-9, 0.0), Error);
  }
}

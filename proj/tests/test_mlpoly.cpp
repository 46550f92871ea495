#include <doctest.h>

#include <random>

#include "pdeforge/mlpoly.hpp"
#include "pdeforge/oracles.hpp"

using namespace pdeforge;

namespace {

MLPoly one_plus_x0(unsigned n, RingId ring) {
  MLPoly p(n, ring);
  p.add_term(Monomial::empty(), RingElem::one(ring));
  p.add_term(Monomial::single(0), RingElem::one(ring));
  return p;
}

MLPoly random_poly(std::mt19937_64& rng, unsigned n, unsigned terms) {
  MLPoly p(n, kRationalRing);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned t = 0; t < terms; ++t)
    p.add_term(Monomial{rng() & ((uint64_t{1} << n) - 1)}, RingElem::integer(coeff(rng)));
  return p;
}

}  // namespace

TEST_SUITE("mlpoly") {
  TEST_CASE("reduced multiplication forces x^2 = x") {
    MLPoly p = one_plus_x0(2, kRationalRing);
    MLPoly sq = p * p;
    CHECK(sq.term_count() == 2);
    CHECK(sq.coefficient(Monomial::empty()).rational_value() == 1);
    CHECK(sq.coefficient(Monomial::single(0)).rational_value() == 3);

    MLPoly q = one_plus_x0(2, kGf2Ring);
    MLPoly sq2 = q * q;
    CHECK(sq2.coefficient(Monomial::single(0)).gf2_value() == 1);  // 3 mod 2

    MLPoly x0 = MLPoly::variable(2, 0, kRationalRing);
    MLPoly x1 = MLPoly::variable(2, 1, kRationalRing);
    MLPoly prod = x0 * x1;
    CHECK(prod.term_count() == 1);
    CHECK(prod.coefficient(Monomial{0b11}).is_one());
  }

  TEST_CASE("general polynomial reduction clamps exponents") {
    GeneralPoly g(2, kRationalRing, 8);
    g.add_term({2, 0}, RingElem::integer(1));  // x0^2
    CHECK(g.reduce_multilinear().coefficient(Monomial::single(0)).is_one());

    GeneralPoly h(2, kRationalRing, 8);
    h.add_term({3, 2}, RingElem::integer(1));  // x0^3 x1^2
    h.add_term({1, 1}, RingElem::integer(1));  // x0 x1
    MLPoly reduced = h.reduce_multilinear();
    CHECK(reduced.term_count() == 1);
    CHECK(reduced.coefficient(Monomial{0b11}).rational_value() == 2);

    GeneralPoly c = GeneralPoly::constant(2, RingElem::integer(5));
    CHECK(c.reduce_multilinear().coefficient(Monomial::empty()).rational_value() == 5);
  }

  TEST_CASE("reduction preserves values on the hypercube") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<uint32_t> expo(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      unsigned n = 1 + static_cast<unsigned>(rng() % 10);
      GeneralPoly g(n, kRationalRing, 8);
      for (int t = 0; t < 8; ++t) {
        GeneralPoly::Exponents e(n);
        for (auto& x : e) x = expo(rng);
        g.add_term(std::move(e), RingElem::integer(coeff(rng)));
      }
      MLPoly reduced = g.reduce_multilinear();
      std::vector<RingElem> point(n, RingElem::integer(0));
      for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
        for (unsigned i = 0; i < n; ++i) point[i] = RingElem::integer((b >> i) & 1);
        CHECK(g.evaluate(point) == reduced.evaluate(point));
      }
    }
  }

  TEST_CASE("coefficient extraction matches the worked table") {
    MLPoly p(2, kRationalRing);
    p.add_term(Monomial::empty(), RingElem::integer(1));
    p.add_term(Monomial::single(0), RingElem::integer(1));
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    CHECK(p.coefficient(Monomial{0b11}).rational_value() == 1);
    CHECK(p.coefficient(Monomial::single(1)).is_zero());
    CHECK(p.coefficient(Monomial::empty()).rational_value() == 1);
  }

  TEST_CASE("coefficient extraction equals the alternating-sum oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      unsigned n = 2 + static_cast<unsigned>(rng() % 5);  // up to 6
      MLPoly p = random_poly(rng, n, 10);
      for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
        mpq_class via_map = p.coefficient(Monomial{t}).rational_value();
        CHECK(via_map == oracles::mobius_coefficient(p, Monomial{t}));
      }
    }
  }

  TEST_CASE("evaluation") {
    MLPoly p(2, kRationalRing);
    p.add_term(Monomial::empty(), RingElem::integer(1));
    p.add_term(Monomial::single(0), RingElem::integer(1));
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    std::vector<RingElem> ones{RingElem::integer(1), RingElem::integer(1)};
    CHECK(p.evaluate(ones).rational_value() == 3);
    std::vector<RingElem> zeros{RingElem::integer(0), RingElem::integer(0)};
    CHECK(p.evaluate(zeros).rational_value() == 1);

    // x0 + x1 - x0 x1 at (1,0)
    MLPoly orp(2, kRationalRing);
    orp.add_term(Monomial::single(0), RingElem::integer(1));
    orp.add_term(Monomial::single(1), RingElem::integer(1));
    orp.add_term(Monomial{0b11}, RingElem::integer(-1));
    std::vector<RingElem> point{RingElem::integer(1), RingElem::integer(0)};
    CHECK(orp.evaluate(point).rational_value() == 1);
  }

  TEST_CASE("scale_vars") {
    MLPoly p(2, kRationalRing);
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    std::vector<RingElem> ones(2, RingElem::integer(1));
    CHECK(p.scale_vars(ones, RingElem::integer(1)) == p);

    std::vector<RingElem> minus(2, RingElem::integer(-1));
    MLPoly scaled = p.scale_vars(minus, RingElem::integer(1));
    CHECK(scaled.coefficient(Monomial{0b11}).rational_value() == 1);  // (-1)^2

    RingId c4{RingTag::Cyclotomic, 4};
    MLPoly x0(2, c4);
    x0.add_term(Monomial::single(0), RingElem::one(c4));
    std::vector<RingElem> u(2, RingElem::root_of_unity(4, 1));
    MLPoly zx = x0.scale_vars(u, RingElem::root_of_unity(4, 1));
    CHECK(zx.coefficient(Monomial::single(0)) == RingElem::root_of_unity(4, 2));

    CHECK_THROWS_AS(p.scale_vars(std::vector<RingElem>(1, RingElem::integer(1)),
                                 RingElem::integer(1)),
                    Error);
  }

  TEST_CASE("unit-power scaling preserves coefficient unit powers") {
    std::mt19937_64 rng(77);
    const unsigned m = 4;
    RingId ring{RingTag::Cyclotomic, m};
    for (int trial = 0; trial < 10; ++trial) {
      unsigned n = 2 + static_cast<unsigned>(rng() % 3);
      MLPoly p(n, ring);
      for (uint64_t t = 0; t < (uint64_t{1} << n); ++t)
        if (rng() & 1) p.add_term(Monomial{t}, RingElem::root_of_unity(m, static_cast<long>(rng() % m)));
      std::vector<RingElem> u;
      for (unsigned i = 0; i < n; ++i) u.push_back(RingElem::root_of_unity(m, static_cast<long>(rng() % m)));
      RingElem mu = RingElem::root_of_unity(m, static_cast<long>(rng() % m));
      MLPoly q = p.scale_vars(u, mu);
      for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
        bool before = p.coefficient(Monomial{t}).pow_m_is_unit(m);
        bool after = q.coefficient(Monomial{t}).pow_m_is_unit(m);
        CHECK(before == after);
      }
    }
  }

  TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 12; ++trial) {
      unsigned n = 2 + static_cast<unsigned>(rng() % 4);
      MLPoly a = random_poly(rng, n, 6);
      MLPoly b = random_poly(rng, n, 6);
      MLPoly c = random_poly(rng, n, 6);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("terms iterate by (degree, numeric value)") {
    std::mt19937_64 rng(3);
    MLPoly p = random_poly(rng, 8, 30);
    unsigned last_deg = 0;
    uint64_t last_bits = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      if (!first) {
        bool ordered = m.degree() > last_deg || (m.degree() == last_deg && m.bits > last_bits);
        CHECK(ordered);
      }
      last_deg = m.degree();
      last_bits = m.bits;
      first = false;
    }
  }

  TEST_CASE("ring and arity mismatches are rejected") {
    MLPoly a(2, kRationalRing), b(3, kRationalRing), c(2, kGf2Ring);
    CHECK_THROWS_AS((void)(a + b), Error);
    CHECK_THROWS_AS((void)(a * c), Error);
    CHECK_THROWS_AS(a.add_term(Monomial::single(0), RingElem::gf2(1)), Error);
  }
}

#include <doctest.h>

#include <random>

#include "pdeforge/boolean.hpp"
#include "pdeforge/oracles.hpp"

using namespace pdeforge;

TEST_SUITE("boolean") {
  TEST_CASE("Boole correspondence base cases") {
    auto x0 = Formula::make_var(0);
    auto x1 = Formula::make_var(1);

    MLPoly por = boole_encode(*Formula::make_or(x0, x1), 2);
    CHECK(por.coefficient(Monomial::single(0)).rational_value() == 1);
    CHECK(por.coefficient(Monomial::single(1)).rational_value() == 1);
    CHECK(por.coefficient(Monomial{0b11}).rational_value() == -1);

    MLPoly pnot = boole_encode(*Formula::make_not(x0), 2);
    CHECK(pnot.coefficient(Monomial::empty()).rational_value() == 1);
    CHECK(pnot.coefficient(Monomial::single(0)).rational_value() == -1);

    CHECK(boole_encode(*Formula::make_const(true), 2) == MLPoly::one(2, kRationalRing));
    CHECK_THROWS_AS(boole_encode(*Formula::make_var(5), 2), Error);
  }

  TEST_CASE("encodings agree with semantics on random formulas") {
    std::mt19937_64 rng(17);
    const unsigned n = 10;
    std::function<Formula::Ptr(unsigned)> gen = [&](unsigned depth) -> Formula::Ptr {
      if (depth == 0 || (rng() % 4) == 0) {
        if ((rng() % 8) == 0) return Formula::make_const(rng() & 1);
        return Formula::make_var(static_cast<unsigned>(rng() % n));
      }
      switch (rng() % 3) {
        case 0: return Formula::make_not(gen(depth - 1));
        case 1: return Formula::make_and(gen(depth - 1), gen(depth - 1));
        default: return Formula::make_or(gen(depth - 1), gen(depth - 1));
      }
    };
    std::vector<RingElem> point(n, RingElem::integer(0));
    for (int trial = 0; trial < 30; ++trial) {
      Formula::Ptr f = gen(4);
      MLPoly p = boole_encode(*f, n);
      for (int sample = 0; sample < 40; ++sample) {
        uint64_t b = rng() & ((uint64_t{1} << n) - 1);
        for (unsigned i = 0; i < n; ++i) point[i] = RingElem::integer((b >> i) & 1);
        CHECK(p.evaluate(point).rational_value() == (eval_formula(*f, Monomial{b}) ? 1 : 0));
      }
    }
  }

  TEST_CASE("sum-product construction encodes the table as coefficients") {
    TruthTable t = TruthTable::from_bit_string(2, "1101");
    MLPoly p = interpolate_sumproduct(t);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial::empty()).is_one());
    CHECK(p.coefficient(Monomial::single(0)).is_one());
    CHECK(p.coefficient(Monomial{0b11}).is_one());
    CHECK(p.coefficient(Monomial::single(1)).is_zero());

    CHECK(interpolate_sumproduct(TruthTable::constant(3, false)).is_zero());

    TruthTable top = TruthTable::constant(2, false);
    top.set(0b11, true);
    MLPoly indicator = interpolate_sumproduct(top);
    CHECK(indicator.term_count() == 1);
    CHECK(indicator.coefficient(Monomial{0b11}).is_one());
  }

  TEST_CASE("binary-encoding route matches for every 2-input table") {
    for (unsigned bits = 0; bits < 16; ++bits) {
      std::vector<bool> v(4);
      for (size_t i = 0; i < 4; ++i) v[i] = (bits >> i) & 1;
      TruthTable t(2, v);
      CHECK(interpolate_binary(t) == interpolate_sumproduct(t, kGf2Ring));
    }
  }

  TEST_CASE("binary-encoding route on the XOR table") {
    TruthTable t = TruthTable::from_bit_string(2, "0110");
    MLPoly p = interpolate_binary(t);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial::single(0)).gf2_value() == 1);
    CHECK(p.coefficient(Monomial::single(1)).gf2_value() == 1);
  }

  TEST_CASE("binary-encoding route respects the size guard") {
    CHECK_THROWS_AS(interpolate_binary(TruthTable::constant(5, true)), Error);
  }

  TEST_CASE("pde evaluation and the invalid-PDE error") {
    MLPoly p(2, kRationalRing);
    p.add_term(Monomial::empty(), RingElem::integer(1));
    p.add_term(Monomial::single(0), RingElem::integer(1));
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    CHECK(pde_evaluate(p, Monomial::single(1), 1) == 0);
    CHECK(pde_evaluate(p, Monomial{0b11}, 1) == 1);

    MLPoly bad(1, kRationalRing);
    bad.add_term(Monomial::single(0), RingElem::integer(2));
    CHECK_THROWS_WITH_AS(pde_evaluate(bad, Monomial::single(0), 1),
                         doctest::Contains("T={0}"), Error);
    // -1 squares to the identity.
    MLPoly neg(1, kRationalRing);
    neg.add_term(Monomial::single(0), RingElem::integer(-1));
    CHECK(pde_evaluate(neg, Monomial::single(0), 2) == 1);
  }

  TEST_CASE("scaled subset products stay valid PDEs") {
    const unsigned m = 4, n = 4;
    RingId ring{RingTag::Cyclotomic, m};
    std::mt19937_64 rng(23);
    std::vector<unsigned> s{0, 2};
    auto circuit = SigmaPiSigma::subset_product(s, n, ring);
    MLPoly p = circuit.expand(true);
    std::vector<RingElem> u;
    for (unsigned i = 0; i < n; ++i)
      u.push_back(RingElem::root_of_unity(m, static_cast<long>(rng() % m)));
    RingElem mu = RingElem::root_of_unity(m, static_cast<long>(rng() % m));
    MLPoly scaled = p.scale_vars(u, mu);
    Monomial smask = Monomial::of(s);
    for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
      int want = Monomial{t}.subset_of(smask) ? 1 : 0;
      CHECK(pde_evaluate(scaled, Monomial{t}, m) == want);
    }
  }

  TEST_CASE("verification round trip and fault injection") {
    std::mt19937_64 rng(29);
    for (unsigned n = 1; n <= 3; ++n)
      for (uint64_t bits = 0; bits < (uint64_t{1} << (1u << n)); ++bits) {
        std::vector<bool> v(size_t{1} << n);
        for (size_t i = 0; i < v.size(); ++i) v[i] = (bits >> i) & 1;
        TruthTable t(n, v);
        CHECK(verify_pde(interpolate_sumproduct(t), t, 1).pass);
      }
    for (int trial = 0; trial < 10; ++trial) {
      unsigned n = 4 + static_cast<unsigned>(rng() % 9);  // up to 12
      TruthTable t = TruthTable::constant(n, false);
      for (size_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1);
      MLPoly p = interpolate_sumproduct(t);
      CHECK(verify_pde(p, t, 1).pass);
      // Flip one coefficient; the report must name exactly that subset.
      uint64_t where = rng() & ((uint64_t{1} << n) - 1);
      MLPoly corrupted = p;
      bool was_one = p.coefficient(Monomial{where}).is_one();
      corrupted.add_term(Monomial{where}, RingElem::integer(was_one ? -1 : 1));
      VerifyReport r = verify_pde(corrupted, t, 1);
      CHECK_FALSE(r.pass);
      REQUIRE(r.mismatches.size() == 1);
      CHECK(r.mismatches[0].bits == where);
    }
  }

  TEST_CASE("verification works through circuits") {
    std::vector<unsigned> s{1, 3};
    auto circuit = SigmaPiSigma::superset_product(s, 5);
    TruthTable t = TruthTable::constant(5, false);
    for (size_t b = 0; b < t.size(); ++b)
      t.set(b, Monomial::of(s).subset_of(Monomial{b}));
    CHECK(verify_pde(circuit, t, 1).pass);
  }

  TEST_CASE("monotone link: AND encodes the minimal superset monomial") {
    const unsigned n = 10;
    std::vector<unsigned> s{1, 4, 7};
    Formula::Ptr f = Formula::make_and(
        Formula::make_and(Formula::make_var(1), Formula::make_var(4)), Formula::make_var(7));
    MLPoly encoded = boole_encode(*f, n);
    CHECK(encoded.term_count() == 1);
    CHECK(encoded.coefficient(Monomial::of(s)).is_one());

    MLPoly expanded = SigmaPiSigma::superset_product(s, n).expand(true);
    CHECK(expanded.coefficient(Monomial::of(s)).is_one());
    Monomial smask = Monomial::of(s);
    for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
      int want = smask.subset_of(Monomial{t}) ? 1 : 0;
      CHECK(pde_evaluate(expanded, Monomial{t}, 1) == want);
    }
  }

  TEST_CASE("numeric circuits evaluate through the tolerance contract") {
    NumericCircuit c(1, 2, 2);
    // (1 - x1)(1 + x0) has reduced coefficients {1, 1, -1, -1}.
    c.at(0, 0, 0) = 1.0;
    c.at(0, 0, 2) = -1.0;
    c.at(0, 1, 0) = 1.0;
    c.at(0, 1, 1) = 1.0;
    CHECK(pdp_evaluate(c, Monomial::empty(), 1) == 1);
    CHECK(pdp_evaluate(c, Monomial::single(0), 1) == 1);
    CHECK(pdp_evaluate(c, Monomial{0b11}, 2) == 1);
    CHECK_THROWS_AS(pdp_evaluate(c, Monomial::single(1), 1), Error);  // -1 is neither bit
  }

  TEST_CASE("table guards") {
    CHECK_THROWS_AS(TruthTable(2, std::vector<bool>(3)), Error);
    CHECK_THROWS_AS(TruthTable::from_bit_string(2, "12x1"), Error);
    CHECK_THROWS_AS(verify_pde(MLPoly::zero(17, kRationalRing), TruthTable::constant(17, false), 1),
                    Error);
  }
}

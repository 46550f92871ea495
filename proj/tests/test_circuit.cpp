#include <doctest.h>

#include <random>

#include "pdeforge/circuit.hpp"

using namespace pdeforge;

namespace {

std::vector<unsigned> set_of(std::initializer_list<unsigned> xs) { return {xs}; }

MLPoly random_sparse(std::mt19937_64& rng, unsigned n, unsigned terms) {
  MLPoly p(n, kRationalRing);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c) p.add_term(Monomial{rng() & ((uint64_t{1} << n) - 1)}, RingElem::integer(c));
  }
  return p;
}

}  // namespace

TEST_SUITE("circuit") {
  TEST_CASE("subset product expansion") {
    auto c = SigmaPiSigma::subset_product(set_of({0}), 3);
    MLPoly p = c.expand(true);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial::empty()).is_one());
    CHECK(p.coefficient(Monomial::single(0)).is_one());

    auto full = SigmaPiSigma::subset_product(set_of({0, 1, 2}), 3);
    MLPoly pf = full.expand(true);
    CHECK(pf.term_count() == 8);
    for (const auto& [m, coeff] : pf.terms()) CHECK(coeff.is_one());

    auto empty = SigmaPiSigma::subset_product({}, 3);
    CHECK(empty.expand(true) == MLPoly::one(3, kRationalRing));
  }

  TEST_CASE("superset product expansion") {
    auto all = SigmaPiSigma::superset_product({}, 2);
    CHECK(all.expand(true).term_count() == 4);

    auto top = SigmaPiSigma::superset_product(set_of({0, 1, 2}), 3);
    MLPoly pt = top.expand(true);
    CHECK(pt.term_count() == 1);
    CHECK(pt.coefficient(Monomial{0b111}).is_one());

    auto one = SigmaPiSigma::superset_product(set_of({0}), 3);
    MLPoly po = one.expand(true);
    CHECK(po.term_count() == 4);
    for (const auto& [m, coeff] : po.terms()) CHECK(m.contains(0));
  }

  TEST_CASE("size reports") {
    CHECK(SigmaPiSigma::subset_product(set_of({0, 1, 2}), 9).size_report().product == 30);
    auto r = SigmaPiSigma::subset_product(set_of({0, 1, 2}), 9).size_report();
    CHECK(r.rho == 1);
    CHECK(r.d == 3);
    CHECK(r.width == 10);

    MLPoly p(2, kRationalRing);
    p.add_term(Monomial::empty(), RingElem::integer(1));
    p.add_term(Monomial::single(0), RingElem::integer(1));
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    auto t = SigmaPiSigma::trivial_circuit(p).size_report();
    CHECK(t.rho == 3);
    CHECK(t.d == 2);
    CHECK(t.width == 3);
    CHECK(t.product == 18);

    CHECK(SigmaPiSigma::superset_product({}, 4).size_report().product == 20);
  }

  TEST_CASE("trivial circuit round trips the polynomial") {
    MLPoly p(2, kRationalRing);
    p.add_term(Monomial::empty(), RingElem::integer(1));
    p.add_term(Monomial::single(0), RingElem::integer(1));
    p.add_term(Monomial{0b11}, RingElem::integer(1));
    CHECK(SigmaPiSigma::trivial_circuit(p).expand(true) == p);

    MLPoly x0 = MLPoly::variable(4, 0, kRationalRing);
    auto c = SigmaPiSigma::trivial_circuit(x0);
    CHECK(c.rho() == 1);
    CHECK(c.d() == 1);
    CHECK(c.expand(true) == x0);

    CHECK_THROWS_AS(SigmaPiSigma::trivial_circuit(MLPoly::zero(3, kRationalRing)), Error);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
      unsigned n = 2 + static_cast<unsigned>(rng() % 11);  // up to 12
      MLPoly q = random_sparse(rng, n, 12);
      if (q.is_zero()) continue;
      CHECK(SigmaPiSigma::trivial_circuit(q).expand(true) == q);
    }
  }

  TEST_CASE("factored worked example expands to the table polynomial") {
    // 1 + x0 (1 + x1) as two summands.
    SigmaPiSigma c(2, 2, 2, kRationalRing);
    c.at(0, 0, 0) = RingElem::integer(1);
    c.at(0, 1, 0) = RingElem::integer(1);
    c.at(1, 0, 1) = RingElem::integer(1);
    c.at(1, 1, 0) = RingElem::integer(1);
    c.at(1, 1, 2) = RingElem::integer(1);
    MLPoly p = c.expand(true);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial::empty()).rational_value() == 1);
    CHECK(p.coefficient(Monomial::single(0)).rational_value() == 1);
    CHECK(p.coefficient(Monomial{0b11}).rational_value() == 1);
  }

  TEST_CASE("raw expansion guards against non-multilinear targets") {
    SigmaPiSigma c(1, 2, 1, kRationalRing);
    c.at(0, 0, 1) = RingElem::integer(1);
    c.at(0, 1, 1) = RingElem::integer(1);  // x0 * x0
    CHECK_THROWS_AS(c.expand(false), Error);
    GeneralPoly raw = c.expand_raw();
    CHECK(raw.terms().begin()->first == GeneralPoly::Exponents{2});
    CHECK(c.expand(true).coefficient(Monomial::single(0)).is_one());
  }

  TEST_CASE("numeric expansion dual routes agree") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
      NumericCircuit c(2 + rng() % 2, 2 + rng() % 2, 3);
      for (auto& x : c.entries) x = uni(rng);
      auto a = c.expand_reduced();
      auto b = expand_reduced_enumerative(c);
      for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
  }

  TEST_CASE("pdp search finds exact factorizations") {
    MLPoly target(2, kRationalRing);
    target.add_term(Monomial{0b11}, RingElem::integer(1));
    PdpSearchOptions opts;
    opts.seeds = 6;
    PdpSearchResult r = pdp_search(target, 1, 2, opts);
    CHECK(r.converged);
    CHECK(r.residual < 1e-9);
  }

  TEST_CASE("pdp search reproduces the 1x2x3 program") {
    MLPoly target(2, kRationalRing);
    target.add_term(Monomial::empty(), RingElem::integer(1));
    target.add_term(Monomial::single(0), RingElem::integer(1));
    target.add_term(Monomial{0b11}, RingElem::integer(1));
    PdpSearchOptions opts;
    opts.seeds = 12;
    PdpSearchResult r = pdp_search(target, 1, 2, opts);
    CHECK(r.residual < 1e-8);
    for (size_t i = 1; i < r.residual_trace.size(); ++i)
      CHECK(r.residual_trace[i] <= r.residual_trace[i - 1] + 1e-15);

    // Partial assignment from the worked example.
    PdpSearchOptions fixed = opts;
    double b11 = -(std::sqrt(4.0 * std::sqrt(15.0) + 17.0) + 1.0) / 2.0;
    fixed.fixed = {{0, 0, 2, -1.0}, {0, 1, 1, b11}, {0, 1, 2, 1.0}};
    PdpSearchResult rf = pdp_search(target, 1, 2, fixed);
    CHECK(rf.residual < 1e-6);
    CHECK(rf.circuit.at(0, 0, 2) == -1.0);
    CHECK(rf.circuit.at(0, 1, 1) == b11);
  }

  TEST_CASE("pdp search reports failure without throwing") {
    // Degree-2 target cannot be matched by a single linear form.
    MLPoly target(2, kRationalRing);
    target.add_term(Monomial{0b11}, RingElem::integer(1));
    PdpSearchOptions opts;
    opts.seeds = 2;
    opts.max_iterations = 40;
    PdpSearchResult r = pdp_search(target, 1, 1, opts);
    CHECK_FALSE(r.converged);
    CHECK(r.residual > 1e-3);
  }

  TEST_CASE("search is deterministic for a fixed seed") {
    MLPoly target(2, kRationalRing);
    target.add_term(Monomial::empty(), RingElem::integer(1));
    target.add_term(Monomial::single(0), RingElem::integer(1));
    target.add_term(Monomial{0b11}, RingElem::integer(1));
    PdpSearchOptions opts;
    opts.seeds = 4;
    opts.seed = 9;
    PdpSearchResult a = pdp_search(target, 1, 2, opts);
    PdpSearchResult b = pdp_search(target, 1, 2, opts);
    CHECK(a.residual == b.residual);
    CHECK(a.best_seed == b.best_seed);
    CHECK(a.circuit.entries == b.circuit.entries);
  }
}

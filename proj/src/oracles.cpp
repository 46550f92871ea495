#include "pdeforge/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace pdeforge::oracles {

mpq_class det_cofactor(const ExactMatrix& a) {
  const unsigned n = a.n;
  if (n == 1) return a.at(0, 0);
  mpq_class acc = 0;
  for (unsigned col = 0; col < n; ++col) {
    if (sgn(a.at(0, col)) == 0) continue;
    ExactMatrix minor(n - 1);
    for (unsigned i = 1; i < n; ++i) {
      unsigned jj = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (j == col) continue;
        minor.at(i - 1, jj++) = a.at(i, j);
      }
    }
    mpq_class term = a.at(0, col) * det_cofactor(minor);
    acc += col % 2 == 0 ? term : -term;
  }
  return acc;
}

mpq_class permanent_enumeration(const ExactMatrix& a) {
  std::vector<unsigned> sigma(a.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  mpq_class acc = 0;
  do {
    mpq_class prod = 1;
    for (unsigned i = 0; i < a.n; ++i) prod *= a.at(i, sigma[i]);
    acc += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc;
}

mpq_class mobius_coefficient(const MLPoly& p, Monomial t) {
  std::vector<RingElem> point(p.nvars(), RingElem::integer(0));
  mpq_class acc = 0;
  uint64_t sub = t.bits;
  while (true) {
    for (unsigned i = 0; i < p.nvars(); ++i)
      point[i] = RingElem::integer((sub >> i) & 1);
    mpq_class value = p.evaluate(point).rational_value();
    unsigned removed = t.degree() - static_cast<unsigned>(__builtin_popcountll(sub));
    acc += removed % 2 == 0 ? value : -value;
    if (sub == 0) break;
    sub = (sub - 1) & t.bits;
  }
  return acc;
}

bool functional_tree(const BitMatrix& m, unsigned n) {
  std::vector<unsigned> f(n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned count = 0, img = 0;
    for (unsigned j = 0; j < n; ++j)
      if (m[n * i + j]) {
        ++count;
        img = j;
      }
    if (count != 1) return false;
    f[i] = img;
  }
  // |f^(n-1)(Z_n)| = 1
  std::vector<bool> image(n, false);
  for (unsigned i = 0; i < n; ++i) image[i] = true;
  for (unsigned step = 0; step + 1 < n; ++step) {
    std::vector<bool> next(n, false);
    for (unsigned i = 0; i < n; ++i)
      if (image[i]) next[f[i]] = true;
    image = next;
  }
  unsigned size = 0;
  for (unsigned i = 0; i < n; ++i)
    if (image[i]) ++size;
  return size == 1;
}

bool permutation_matrix(const BitMatrix& m, unsigned n) {
  for (unsigned i = 0; i < n; ++i) {
    unsigned row = 0, col = 0;
    for (unsigned j = 0; j < n; ++j) {
      row += m[n * i + j];
      col += m[n * j + i];
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

unsigned gf2_rank(unsigned n, uint64_t t) {
  std::vector<unsigned> rows(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if ((t >> (n * i + j)) & 1) rows[i] |= 1u << j;
  unsigned rank = 0;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = n;
    for (unsigned i = rank; i < n; ++i)
      if ((rows[i] >> col) & 1) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned i = 0; i < n; ++i)
      if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool iso_relation(const GraphSet& s, const GraphSet& t) {
  for (const auto& lambda : all_permutations(s.n))
    if (act(lambda, t).edges == s.edges) return true;
  return false;
}

bool sub_iso_relation(const GraphSet& s, const GraphSet& t) {
  for (const auto& lambda : all_permutations(s.n))
    if ((act(lambda, t).edges & ~s.edges) == 0) return true;
  return false;
}

bool super_iso_relation(const GraphSet& s, const GraphSet& t) {
  for (const auto& lambda : all_permutations(s.n))
    if ((act(lambda, s).edges & ~t.edges) == 0) return true;
  return false;
}

TruthTable threshold_table(CardinalityKind kind, unsigned s, unsigned nvars) {
  TruthTable t = TruthTable::constant(nvars, false);
  for (size_t b = 0; b < t.size(); ++b) {
    unsigned card = static_cast<unsigned>(__builtin_popcountll(b));
    bool v = kind == CardinalityKind::LessEq      ? card <= s
             : kind == CardinalityKind::GreaterEq ? card >= s
                                                  : card == s;
    t.set(b, v);
  }
  return t;
}

std::map<unsigned long, unsigned long> factor_factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  std::map<unsigned long, unsigned long> out;
  for (unsigned long p = 2; f > 1; ++p) {
    while (mpz_divisible_ui_p(f.get_mpz_t(), p)) {
      mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), p);
      ++out[p];
    }
  }
  return out;
}

}  // namespace pdeforge::oracles

#include "pdeforge/matrixalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace pdeforge {

namespace {

constexpr unsigned kLiteralGuard = 6;
constexpr unsigned kExteriorGuard = 16;
constexpr unsigned kPermanentGuard = 12;
constexpr unsigned kTreeSymbolicGuard = 6;
constexpr unsigned kTreeValueGuard = 10;
constexpr unsigned kCyclesGuard = 10;
constexpr unsigned kDetGf2Guard = 3;

void check_square(const ExactMatrix& a) {
  if (a.n == 0 || a.a.size() != static_cast<size_t>(a.n) * a.n)
    throw_error(ErrorKind::Precondition, "matrix must be square and nonempty");
}

// Rational determinant by Gaussian elimination with pivoting.
mpq_class det_gauss(ExactMatrix m) {
  const unsigned n = m.n;
  mpq_class det = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && sgn(m.at(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    mpq_class inv = 1 / m.at(col, col);
    for (unsigned row = col + 1; row < n; ++row) {
      if (sgn(m.at(row, col)) == 0) continue;
      mpq_class f = m.at(row, col) * inv;
      for (unsigned j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
    }
  }
  return det;
}

}  // namespace

ExactMatrix ExactMatrix::identity(unsigned n) {
  ExactMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<int> grassmann_theta(unsigned j, unsigned n) {
  if (n == 0 || n > kLiteralGuard)
    throw_error(ErrorKind::SizeGuard, "literal Grassmann matrices bounded at 1 <= n <= 6");
  if (j >= n) throw_error(ErrorKind::Precondition, "generator index out of range");
  const size_t dim = size_t{1} << n;
  std::vector<int> theta(dim * dim, 0);
  // Kronecker structure: row/col r = bits r_0..r_{n-1}, leftmost factor on
  // the most significant bit. Entry nonzero iff all identity/Z positions
  // agree and position j is the (1,0) entry of a.
  for (size_t col = 0; col < dim; ++col) {
    // Factor k acts on bit (n-1-k).
    size_t row = col | (size_t{1} << (n - 1 - j));
    if ((col >> (n - 1 - j)) & 1) continue;  // a has a zero column there
    int sign = 1;
    for (unsigned k = 0; k < j; ++k)
      if ((col >> (n - 1 - k)) & 1) sign = -sign;  // Z = diag(1,-1)
    theta[row * dim + col] = sign;
  }
  return theta;
}

void grassmann_verify_literal(unsigned n) {
  const size_t dim = size_t{1} << n;
  std::vector<std::vector<int>> thetas;
  for (unsigned j = 0; j < n; ++j) thetas.push_back(grassmann_theta(j, n));
  auto mul = [dim](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out(dim * dim, 0);
    for (size_t i = 0; i < dim; ++i)
      for (size_t k = 0; k < dim; ++k) {
        int v = x[i * dim + k];
        if (v == 0) continue;
        for (size_t j = 0; j < dim; ++j) out[i * dim + j] += v * y[k * dim + j];
      }
    return out;
  };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      auto ij = mul(thetas[i], thetas[j]);
      auto ji = mul(thetas[j], thetas[i]);
      for (size_t k = 0; k < dim * dim; ++k) {
        long sum = static_cast<long>(ij[k]) + ji[k];
        if (i == j ? ij[k] != 0 : sum != 0)
          throw_error(ErrorKind::Internal,
                      "Grassmann generators violate the anticommutation identity");
      }
    }
}

namespace {

mpq_class det_grassmann_literal(const ExactMatrix& a) {
  if (a.n > kLiteralGuard)
    throw_error(ErrorKind::SizeGuard, "literal Grassmann determinant bounded at n <= 6");
  const size_t dim = size_t{1} << a.n;
  std::vector<std::vector<int>> thetas;
  for (unsigned j = 0; j < a.n; ++j) thetas.push_back(grassmann_theta(j, a.n));

  std::vector<mpq_class> acc(dim * dim, mpq_class(0));
  for (size_t i = 0; i < dim; ++i) acc[i * dim + i] = 1;
  for (unsigned row = 0; row < a.n; ++row) {
    std::vector<mpq_class> factor(dim * dim, mpq_class(0));
    for (unsigned j = 0; j < a.n; ++j) {
      if (sgn(a.at(row, j)) == 0) continue;
      const auto& th = thetas[j];
      for (size_t k = 0; k < dim * dim; ++k)
        if (th[k] != 0) factor[k] += th[k] > 0 ? a.at(row, j) : -a.at(row, j);
    }
    std::vector<mpq_class> next(dim * dim, mpq_class(0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t k = 0; k < dim; ++k) {
        if (sgn(acc[i * dim + k]) == 0) continue;
        for (size_t j = 0; j < dim; ++j) {
          if (sgn(factor[k * dim + j]) == 0) continue;
          next[i * dim + j] += acc[i * dim + k] * factor[k * dim + j];
        }
      }
    acc.swap(next);
  }
  return acc[(dim - 1) * dim + 0];
}

mpq_class det_grassmann_exterior(const ExactMatrix& a) {
  if (a.n > kExteriorGuard)
    throw_error(ErrorKind::SizeGuard, "exterior-mode Grassmann determinant bounded at n <= 16");
  // Subset-indexed coefficients with parity signs; left-multiplying by the
  // row form inserts one generator.
  std::map<uint64_t, mpq_class> acc{{0, mpq_class(1)}};
  for (unsigned i = 0; i < a.n; ++i) {
    std::map<uint64_t, mpq_class> next;
    for (const auto& [mask, c] : acc) {
      for (unsigned j = 0; j < a.n; ++j) {
        if (mask & (uint64_t{1} << j)) continue;  // theta_j^2 = 0
        if (sgn(a.at(i, j)) == 0) continue;
        // Sign of moving theta_j past the generators above it in the
        // ascending product.
        unsigned above = static_cast<unsigned>(__builtin_popcountll(mask >> (j + 1)));
        mpq_class term = c * a.at(i, j);
        if (above % 2 == 1) term = -term;
        auto [it, inserted] = next.emplace(mask | (uint64_t{1} << j), term);
        if (!inserted) it->second += term;
      }
    }
    acc.swap(next);
  }
  uint64_t full = a.n == 64 ? ~uint64_t{0} : (uint64_t{1} << a.n) - 1;
  auto it = acc.find(full);
  return it == acc.end() ? mpq_class(0) : it->second;
}

}  // namespace

mpq_class det_grassmann(const ExactMatrix& a, GrassmannMode mode) {
  check_square(a);
  return mode == GrassmannMode::Literal ? det_grassmann_literal(a) : det_grassmann_exterior(a);
}

mpq_class det_vandermonde(const ExactMatrix& a) {
  check_square(a);
  const unsigned n = a.n;
  for (unsigned i = 0; i < n; ++i)
    if (sgn(a.at(i, 0)) == 0)
      throw_error(ErrorKind::Precondition,
                  "vandermonde reduction requires a nonzero first column (row " +
                      std::to_string(i) + ")");

  // Expand prod_{i<j} (t_j - t_i) symbolically; exponent vectors over the
  // indeterminates t_0..t_{n-1}.
  std::map<std::vector<uint32_t>, mpq_class> poly{{std::vector<uint32_t>(n, 0), mpq_class(1)}};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      std::map<std::vector<uint32_t>, mpq_class> next;
      for (const auto& [e, c] : poly) {
        auto ej = e;
        ++ej[j];
        next[ej] += c;
        auto ei = e;
        ++ei[i];
        next[ei] -= c;
      }
      for (auto it = next.begin(); it != next.end();)
        it = sgn(it->second) == 0 ? next.erase(it) : std::next(it);
      poly.swap(next);
    }

  // Staged substitution t_i^j -> A[i,j] / A[i,0] in strictly decreasing j.
  std::map<std::vector<uint32_t>, mpq_class> current = std::move(poly);
  for (unsigned j = n - 1; j >= 1; --j) {
    std::map<std::vector<uint32_t>, mpq_class> next;
    for (const auto& [e, c] : current) {
      std::vector<uint32_t> reste = e;
      mpq_class coeff = c;
      for (unsigned i = 0; i < n; ++i)
        if (e[i] == j) {
          coeff *= a.at(i, j) / a.at(i, 0);
          reste[i] = 0;
        }
      next[reste] += coeff;
    }
    current.swap(next);
    if (j == 1) break;
  }

  mpq_class sum = 0;
  for (const auto& [e, c] : current) {
    for (uint32_t x : e)
      if (x != 0) throw_error(ErrorKind::Internal, "vandermonde reduction left an indeterminate");
    sum += c;
  }
  mpq_class lead = 1;
  for (unsigned i = 0; i < n; ++i) lead *= a.at(i, 0);
  return lead * sum;
}

mpq_class permanent(const ExactMatrix& a) {
  check_square(a);
  if (a.n > kPermanentGuard)
    throw_error(ErrorKind::SizeGuard, "permanent bounded at n <= 12");
  const unsigned n = a.n;
  // State after row i: coefficient of y_S for |S| = i + 1.
  std::vector<mpq_class> state(size_t{1} << n, mpq_class(0));
  state[0] = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<mpq_class> next(size_t{1} << n, mpq_class(0));
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcountll(mask)) != i) continue;
      if (sgn(state[mask]) == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        if (mask & (uint64_t{1} << j)) continue;
        if (sgn(a.at(i, j)) == 0) continue;
        next[mask | (uint64_t{1} << j)] += state[mask] * a.at(i, j);
      }
    }
    state.swap(next);
  }
  return state[(uint64_t{1} << n) - 1];
}

namespace {

// Determinant of a symbolic matrix by cofactor expansion along the first
// row. Entries never share a variable across rows, so the reduced product
// coincides with the ordinary one.
MLPoly det_symbolic(const std::vector<std::vector<MLPoly>>& m, unsigned nvars) {
  const size_t k = m.size();
  if (k == 0) return MLPoly::one(nvars, kRationalRing);
  if (k == 1) return m[0][0];
  MLPoly acc(nvars, kRationalRing);
  for (size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<MLPoly>> minor;
    minor.reserve(k - 1);
    for (size_t i = 1; i < k; ++i) {
      std::vector<MLPoly> row;
      row.reserve(k - 1);
      for (size_t j = 0; j < k; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    MLPoly term = m[0][col] * det_symbolic(minor, nvars);
    acc = col % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

MLPoly p_tree_symbolic(unsigned n) {
  if (n == 0 || n > kTreeSymbolicGuard)
    throw_error(ErrorKind::SizeGuard, "symbolic tree polynomial bounded at 1 <= n <= 6");
  const unsigned nvars = n * n;
  auto var = [&](unsigned i, unsigned j) {
    return MLPoly::variable(nvars, n * i + j, kRationalRing);
  };
  MLPoly acc(nvars, kRationalRing);
  for (unsigned root = 0; root < n; ++root) {
    // (diag(X 1) - X) with row/column `root` deleted.
    std::vector<std::vector<MLPoly>> minor;
    for (unsigned i = 0; i < n; ++i) {
      if (i == root) continue;
      std::vector<MLPoly> row;
      for (unsigned j = 0; j < n; ++j) {
        if (j == root) continue;
        MLPoly entry(nvars, kRationalRing);
        if (i == j) {
          for (unsigned k = 0; k < n; ++k)
            if (k != i) entry = entry + var(i, k);
        } else {
          entry = entry - var(i, j);
        }
        row.push_back(std::move(entry));
      }
      minor.push_back(std::move(row));
    }
    acc = acc + var(root, root) * det_symbolic(minor, nvars);
  }
  return acc;
}

mpq_class p_tree_value(const ExactMatrix& a) {
  check_square(a);
  if (a.n > kTreeValueGuard)
    throw_error(ErrorKind::SizeGuard, "tree polynomial evaluation bounded at n <= 10");
  const unsigned n = a.n;
  mpq_class acc = 0;
  for (unsigned root = 0; root < n; ++root) {
    if (sgn(a.at(root, root)) == 0) continue;
    ExactMatrix minor(n - 1);
    auto skip = [root](unsigned x) { return x < root ? x : x + 1; };
    for (unsigned i = 0; i + 1 < n; ++i)
      for (unsigned j = 0; j + 1 < n; ++j) {
        unsigned ii = skip(i), jj = skip(j);
        if (ii == jj) {
          mpq_class diag = 0;
          for (unsigned k = 0; k < n; ++k)
            if (k != ii) diag += a.at(ii, k);
          minor.at(i, j) = diag;
        } else {
          minor.at(i, j) = -a.at(ii, jj);
        }
      }
    acc += a.at(root, root) * det_gauss(minor);
  }
  return acc;
}

int f_tree(const BitMatrix& m, unsigned n) {
  if (m.size() != static_cast<size_t>(n) * n)
    throw_error(ErrorKind::Precondition, "bit matrix size mismatch");
  if (n > kTreeSymbolicGuard)
    throw_error(ErrorKind::SizeGuard, "tree PDE path bounded at n <= 6");
  Monomial t;
  for (unsigned i = 0; i < n * n; ++i)
    if (m[i]) t.bits |= uint64_t{1} << i;
  RingElem c = p_tree_symbolic(n).coefficient(t);
  if (c.is_zero()) return 0;
  if (c.is_one()) return 1;
  throw_error(ErrorKind::InvalidPde, "tree polynomial coefficient is neither 0 nor 1");
}

namespace {

// Permanent of a 0/1 matrix restricted to a support mask over the n^2 cells.
long permanent_masked(unsigned n, uint64_t support) {
  std::vector<long> state(size_t{1} << n, 0);
  state[0] = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<long> next(size_t{1} << n, 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcountll(mask)) != i || state[mask] == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        if (mask & (uint64_t{1} << j)) continue;
        if (!(support & (uint64_t{1} << (n * i + j)))) continue;
        next[mask | (uint64_t{1} << j)] += state[mask];
      }
    }
    state.swap(next);
  }
  return state[(uint64_t{1} << n) - 1];
}

}  // namespace

int f_cycles(const BitMatrix& m, unsigned n) {
  if (m.size() != static_cast<size_t>(n) * n)
    throw_error(ErrorKind::Precondition, "bit matrix size mismatch");
  if (n > kCyclesGuard)
    throw_error(ErrorKind::SizeGuard, "cycle-cover PDE path bounded at n <= 10");
  // Every monomial of the permanent polynomial carries exactly one entry per
  // row; any other row profile has coefficient zero.
  std::vector<unsigned> cols(n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned count = 0, col = 0;
    for (unsigned j = 0; j < n; ++j)
      if (m[n * i + j]) {
        ++count;
        col = j;
      }
    if (count != 1) return 0;
    cols[i] = col;
  }
  // Alternating sum over sub-supports extracts the exact coefficient of the
  // monomial: sum_{R subset T} (-1)^{|T - R|} Per(M_R).
  long coeff = 0;
  for (uint64_t sub = 0; sub < (uint64_t{1} << n); ++sub) {
    uint64_t support = 0;
    for (unsigned i = 0; i < n; ++i)
      if (sub & (uint64_t{1} << i)) support |= uint64_t{1} << (n * i + cols[i]);
    long per = permanent_masked(n, support);
    unsigned removed = n - static_cast<unsigned>(__builtin_popcountll(sub));
    coeff += removed % 2 == 0 ? per : -per;
  }
  if (coeff == 0) return 0;
  if (coeff == 1) return 1;
  throw_error(ErrorKind::InvalidPde, "permanent coefficient is neither 0 nor 1");
}

MLPoly p_det_poly(unsigned n) {
  if (n == 0 || n > kDetGf2Guard)
    throw_error(ErrorKind::SizeGuard,
                "GF(2) determinant polynomial bounded at 1 <= n <= 3 (168 terms at n = 3)");
  const unsigned nvars = n * n;
  MLPoly p(nvars, kRationalRing);
  // Ordered bases (v_0 .. v_{n-1}) of GF(2)^n, with running span tracking.
  std::vector<unsigned> cols(n, 0);
  std::vector<std::vector<bool>> spans;
  std::vector<bool> base_span(size_t{1} << n, false);
  base_span[0] = true;
  spans.push_back(base_span);
  std::function<void()> rec = [&]() {
    unsigned depth = static_cast<unsigned>(spans.size()) - 1;
    if (depth == n) {
      Monomial mono;
      for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
          if ((cols[j] >> i) & 1) mono.bits |= uint64_t{1} << (n * i + j);
      p.add_term(mono, RingElem::integer(1));
      return;
    }
    const std::vector<bool> span = spans.back();  // copy: push_back reallocates
    for (unsigned v = 1; v < (1u << n); ++v) {
      if (span[v]) continue;
      cols[depth] = v;
      std::vector<bool> next = span;
      for (unsigned s = 0; s < (1u << n); ++s)
        if (span[s]) next[s ^ v] = true;
      spans.push_back(std::move(next));
      rec();
      spans.pop_back();
    }
  };
  rec();
  return p;
}

int f_det_gf2(unsigned n, uint64_t t) {
  MLPoly p = p_det_poly(n);
  RingElem c = p.coefficient(Monomial{t});
  if (c.is_zero()) return 0;
  if (c.is_one()) return 1;
  throw_error(ErrorKind::InvalidPde, "determinant indicator coefficient is neither 0 nor 1");
}

RootsCheckReport integer_roots_check(unsigned d, double tol, double grid_step) {
  if (d < 2) throw_error(ErrorKind::Precondition, "integer roots check needs d >= 2");
  if (grid_step <= 0) throw_error(ErrorKind::Precondition, "grid step must be positive");
  RootsCheckReport report;
  report.d = d;
  const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);

  auto f_abs = [&](double x) {
    std::complex<double> denom = std::exp(two_pi_i * (x / d)) - 1.0;
    if (std::abs(denom) < 1e-12) return static_cast<double>(d);  // removable point
    std::complex<double> num = std::exp(two_pi_i * x) - 1.0;
    return std::abs(num / denom);
  };

  for (unsigned k = 1; k < d; ++k) {
    double v = f_abs(static_cast<double>(k));
    report.max_root_abs = std::max(report.max_root_abs, v);
    if (v > tol) {
      report.pass = false;
      report.failures.push_back("|f(" + std::to_string(k) + ")| = " + std::to_string(v));
    }
  }
  for (double x : {0.0, static_cast<double>(d)}) {
    double v = f_abs(x);
    if (std::abs(v - d) > tol) {
      report.pass = false;
      report.failures.push_back("|f(" + std::to_string(x) + ")| != d");
    }
  }
  report.min_offgrid_abs = std::numeric_limits<double>::infinity();
  for (double x = -static_cast<double>(d); x <= 2.0 * d; x += grid_step) {
    double nearest = std::abs(x - std::round(x));
    if (nearest < 0.25) continue;
    double v = f_abs(x);
    report.min_offgrid_abs = std::min(report.min_offgrid_abs, v);
    if (v <= 1e3 * tol) {
      report.pass = false;
      report.failures.push_back("|f(" + std::to_string(x) + ")| = " + std::to_string(v) +
                                " too small off the integers");
    }
  }
  return report;
}

}  // namespace pdeforge

#include "pdeforge/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pdeforge {

namespace {

constexpr unsigned kBruteForceVertexGuard = 8;   // n! enumeration
constexpr unsigned kClassEnumVertexGuard = 5;    // 2^(2C(n,2)) enumeration
constexpr unsigned kListingVertexGuard = 4;      // sub/super listings

void check_vertices(const GraphSet& s, unsigned guard, const char* what) {
  if (s.n > guard)
    throw_error(ErrorKind::SizeGuard, std::string(what) + " is brute force; n <= " +
                                          std::to_string(guard) + " required, got " +
                                          std::to_string(s.n));
}

mpz_class factorial_z(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

uint64_t apply_edge_perm(const std::vector<unsigned>& edge_perm, uint64_t mask) {
  uint64_t out = 0;
  while (mask) {
    unsigned e = static_cast<unsigned>(__builtin_ctzll(mask));
    mask &= mask - 1;
    out |= uint64_t{1} << edge_perm[e];
  }
  return out;
}

uint64_t canonical_in_orbit(const std::vector<std::vector<unsigned>>& edge_perms,
                            uint64_t mask) {
  uint64_t best = ~uint64_t{0};
  for (const auto& ep : edge_perms) best = std::min(best, apply_edge_perm(ep, mask));
  return best;
}

std::vector<std::vector<unsigned>> induced_perms(const EdgeSpace& space) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& lambda : all_permutations(space.vertex_count()))
    out.push_back(induced_edge_permutation(space, lambda));
  return out;
}

}  // namespace

EdgeSpace::EdgeSpace(unsigned n) : n_(n), index_(static_cast<size_t>(n) * n, -1) {
  if (n == 0) throw_error(ErrorKind::Precondition, "edge space needs n >= 1");
  // Ascending lex(i,j) = i + j*n is column-major order over the off-diagonal.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i)
      if (i != j) pairs.push_back({i, j});
  std::sort(pairs.begin(), pairs.end(), [n](auto a, auto b) {
    return a.first + a.second * n < b.first + b.second * n;
  });
  pairs_ = std::move(pairs);
  if (pairs_.size() > 64)
    throw_error(ErrorKind::SizeGuard, "edge space exceeds 64 edges (n too large)");
  for (unsigned e = 0; e < pairs_.size(); ++e)
    index_[pairs_[e].first * n_ + pairs_[e].second] = static_cast<int>(e);
}

std::pair<unsigned, unsigned> EdgeSpace::pair_of(unsigned index) const {
  if (index >= pairs_.size()) throw_error(ErrorKind::Precondition, "edge index out of range");
  return pairs_[index];
}

unsigned EdgeSpace::index_of(unsigned i, unsigned j) const {
  if (i >= n_ || j >= n_) throw_error(ErrorKind::Precondition, "vertex index out of range");
  if (i == j) throw_error(ErrorKind::Precondition, "loop edges are disallowed");
  return static_cast<unsigned>(index_[i * n_ + j]);
}

unsigned EdgeSpace::lex_value(unsigned index) const {
  auto [i, j] = pair_of(index);
  return i + j * n_;
}

std::vector<unsigned> induced_edge_permutation(const EdgeSpace& space,
                                               const VertexPermutation& lambda) {
  if (lambda.size() != space.vertex_count())
    throw_error(ErrorKind::Precondition, "permutation size mismatch");
  std::vector<unsigned> out(space.edge_count());
  for (unsigned e = 0; e < space.edge_count(); ++e) {
    auto [i, j] = space.pair_of(e);
    out[e] = space.index_of(lambda[i], lambda[j]);
  }
  return out;
}

GraphSet act(const VertexPermutation& lambda, const GraphSet& s) {
  EdgeSpace space(s.n);
  auto edge_perm = induced_edge_permutation(space, lambda);
  return GraphSet{s.n, apply_edge_perm(edge_perm, s.edges)};
}

std::vector<VertexPermutation> all_permutations(unsigned n) {
  VertexPermutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<VertexPermutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

unsigned long permutation_lex_rank(const VertexPermutation& p) {
  const unsigned n = static_cast<unsigned>(p.size());
  unsigned long rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    unsigned long f = 1;
    for (unsigned k = 2; k < n - i; ++k) f *= k;
    rank += smaller * f;
  }
  return rank;
}

std::vector<VertexPermutation> automorphisms(const GraphSet& s) {
  check_vertices(s, kBruteForceVertexGuard, "automorphism enumeration");
  EdgeSpace space(s.n);
  std::vector<VertexPermutation> out;
  for (const auto& lambda : all_permutations(s.n)) {
    auto ep = induced_edge_permutation(space, lambda);
    if (apply_edge_perm(ep, s.edges) == s.edges) out.push_back(lambda);
  }
  return out;
}

std::vector<uint64_t> orbit(const GraphSet& s) {
  check_vertices(s, kBruteForceVertexGuard, "orbit enumeration");
  EdgeSpace space(s.n);
  std::set<uint64_t> seen;
  for (const auto& lambda : all_permutations(s.n))
    seen.insert(apply_edge_perm(induced_edge_permutation(space, lambda), s.edges));
  return std::vector<uint64_t>(seen.begin(), seen.end());
}

std::vector<uint64_t> iso_classes(unsigned n, std::optional<unsigned> max_size) {
  if (n > kClassEnumVertexGuard)
    throw_error(ErrorKind::SizeGuard, "isomorphism class enumeration bounded at n <= " +
                                          std::to_string(kClassEnumVertexGuard));
  EdgeSpace space(n);
  auto edge_perms = induced_perms(space);
  const unsigned e = space.edge_count();
  std::vector<bool> seen(size_t{1} << e, false);
  std::vector<uint64_t> reps;
  for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
    if (seen[mask]) continue;
    if (max_size && static_cast<unsigned>(__builtin_popcountll(mask)) > *max_size) continue;
    // Ascending scan: the first unseen member of an orbit is its least mask.
    reps.push_back(mask);
    for (const auto& ep : edge_perms) seen[apply_edge_perm(ep, mask)] = true;
  }
  return reps;
}

mpz_class polya_count(unsigned n) {
  if (n > 10) throw_error(ErrorKind::SizeGuard, "polya_count bounded at n <= 10");
  if (n == 0) throw_error(ErrorKind::Precondition, "polya_count needs n >= 1");
  // Sum over cycle types: (n!/z_type) * 2^(cycles of the induced pair action).
  mpz_class total = 0;
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      mpz_class z = 1;
      std::map<unsigned, unsigned> mult;
      for (unsigned a : parts) ++mult[a];
      for (auto [len, m] : mult) {
        mpz_class lp;
        mpz_ui_pow_ui(lp.get_mpz_t(), len, m);
        z *= lp * factorial_z(m);
      }
      unsigned long cycles = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        cycles += parts[i] - 1;  // ordered pairs inside one cycle
        for (size_t j = i + 1; j < parts.size(); ++j)
          cycles += 2 * std::gcd(parts[i], parts[j]);  // pairs across two cycles
      }
      mpz_class pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, cycles);
      total += factorial_z(n) / z * pow2;
      return;
    }
    for (unsigned a = std::min(remaining, max_part); a >= 1; --a) {
      parts.push_back(a);
      rec(remaining - a, a);
      parts.pop_back();
    }
  };
  rec(n, n);
  mpz_class result;
  mpz_divexact(result.get_mpz_t(), total.get_mpz_t(), factorial_z(n).get_mpz_t());
  return result;
}

MLPoly orbit_polynomial(const GraphSet& s) {
  check_vertices(s, kBruteForceVertexGuard, "orbit polynomial");
  EdgeSpace space(s.n);
  MLPoly p(space.edge_count(), kRationalRing);
  for (uint64_t mask : orbit(s)) p.add_term(Monomial{mask}, RingElem::integer(1));
  return p;
}

MLPoly sub_iso_polynomial(const GraphSet& s) {
  check_vertices(s, kListingVertexGuard, "sub-isomorphism listing");
  EdgeSpace space(s.n);
  auto edge_perms = induced_perms(space);
  std::set<uint64_t> support;
  // Subsets R of S, then every relabeling of R.
  uint64_t sub = s.edges;
  while (true) {
    for (const auto& ep : edge_perms) support.insert(apply_edge_perm(ep, sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.edges;
  }
  MLPoly p(space.edge_count(), kRationalRing);
  for (uint64_t mask : support) p.add_term(Monomial{mask}, RingElem::integer(1));
  return p;
}

MLPoly super_iso_polynomial(const GraphSet& s) {
  check_vertices(s, kListingVertexGuard, "super-isomorphism listing");
  EdgeSpace space(s.n);
  const unsigned e = space.edge_count();
  std::vector<uint64_t> orb = orbit(s);
  MLPoly p(e, kRationalRing);
  for (uint64_t t = 0; t < (uint64_t{1} << e); ++t) {
    bool hit = false;
    for (uint64_t o : orb)
      if ((t & o) == o) {
        hit = true;
        break;
      }
    if (hit) p.add_term(Monomial{t}, RingElem::integer(1));
  }
  return p;
}

namespace {

std::vector<ClassIncidence> group_by_class(const std::vector<std::vector<unsigned>>& edge_perms,
                                           const std::vector<uint64_t>& members) {
  std::map<uint64_t, ClassIncidence> classes;
  for (uint64_t m : members) {
    uint64_t rep = canonical_in_orbit(edge_perms, m);
    auto it = classes.find(rep);
    if (it == classes.end()) {
      ClassIncidence ci;
      ci.rep = rep;
      ci.edge_count = static_cast<unsigned>(__builtin_popcountll(rep));
      std::set<uint64_t> orb;
      for (const auto& ep : edge_perms) orb.insert(apply_edge_perm(ep, rep));
      ci.orbit_size = orb.size();
      ci.multiplicity = 1;
      classes.emplace(rep, ci);
    } else {
      ++it->second.multiplicity;
    }
  }
  std::vector<ClassIncidence> out;
  for (auto& [rep, ci] : classes) out.push_back(ci);
  return out;
}

}  // namespace

std::vector<ClassIncidence> sub_iso_classes(const GraphSet& s) {
  check_vertices(s, kListingVertexGuard, "sub-isomorphism listing");
  EdgeSpace space(s.n);
  auto edge_perms = induced_perms(space);
  std::vector<uint64_t> subs;
  uint64_t sub = s.edges;
  while (true) {
    subs.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s.edges;
  }
  return group_by_class(edge_perms, subs);
}

std::vector<ClassIncidence> super_iso_classes(const GraphSet& s) {
  check_vertices(s, kListingVertexGuard, "super-isomorphism listing");
  EdgeSpace space(s.n);
  auto edge_perms = induced_perms(space);
  const unsigned e = space.edge_count();
  uint64_t complement = (e == 64 ? ~uint64_t{0} : (uint64_t{1} << e) - 1) & ~s.edges;
  std::vector<uint64_t> supers;
  uint64_t extra = complement;
  while (true) {
    supers.push_back(s.edges | extra);
    if (extra == 0) break;
    extra = (extra - 1) & complement;
  }
  return group_by_class(edge_perms, supers);
}

int iso_pde_evaluate(IsoKind kind, const GraphSet& s, const GraphSet& t, unsigned long m) {
  if (s.n != t.n) throw_error(ErrorKind::Precondition, "vertex count mismatch");
  MLPoly p = kind == IsoKind::Iso    ? orbit_polynomial(s)
             : kind == IsoKind::Sub  ? sub_iso_polynomial(s)
                                     : super_iso_polynomial(s);
  RingElem powered = p.coefficient(Monomial{t.edges}).pow(m);
  if (powered.is_zero()) return 0;
  if (powered.is_one()) return 1;
  throw_error(ErrorKind::InvalidPde, "orbit polynomial coefficient power is neither 0 nor 1");
}

mpz_class np_certificate(const GraphSet& s, const GraphSet& t) {
  check_vertices(s, kBruteForceVertexGuard, "certificate search");
  if (s.n != t.n) throw_error(ErrorKind::Precondition, "vertex count mismatch");
  EdgeSpace space(s.n);
  // all_permutations enumerates in lexicographic order, so the first match
  // is the canonical witness.
  for (const auto& sigma : all_permutations(s.n)) {
    auto ep = induced_edge_permutation(space, sigma);
    if (apply_edge_perm(ep, s.edges) == t.edges) {
      mpz_class cert = 0;
      for (unsigned v = 0; v < s.n; ++v) {
        mpz_class bit;
        mpz_ui_pow_ui(bit.get_mpz_t(), 2, static_cast<unsigned long>(s.n) * v + sigma[v]);
        cert += bit;
      }
      return cert;
    }
  }
  return 0;
}

VertexPermutation decode_certificate(const mpz_class& certificate, unsigned n) {
  if (certificate == 0)
    throw_error(ErrorKind::Precondition, "zero certificate encodes no permutation");
  VertexPermutation sigma(n, n);
  std::vector<bool> used(n, false);
  for (unsigned v = 0; v < n; ++v) {
    int found = -1;
    for (unsigned w = 0; w < n; ++w) {
      if (mpz_tstbit(certificate.get_mpz_t(), static_cast<unsigned long>(n) * v + w)) {
        if (found >= 0)
          throw_error(ErrorKind::Parse, "certificate row " + std::to_string(v) + " has two bits");
        found = static_cast<int>(w);
      }
    }
    if (found < 0)
      throw_error(ErrorKind::Parse, "certificate row " + std::to_string(v) + " is empty");
    if (used[found])
      throw_error(ErrorKind::Parse, "certificate is not a permutation matrix");
    used[found] = true;
    sigma[v] = static_cast<unsigned>(found);
  }
  // No stray bits above n*n.
  mpz_class rebuilt = 0;
  for (unsigned v = 0; v < n; ++v) {
    mpz_class bit;
    mpz_ui_pow_ui(bit.get_mpz_t(), 2, static_cast<unsigned long>(n) * v + sigma[v]);
    rebuilt += bit;
  }
  if (rebuilt != certificate)
    throw_error(ErrorKind::Parse, "certificate has bits outside the permutation-matrix block");
  return sigma;
}

Prop3Report prop3_literal_verify(unsigned nvars, std::span<const unsigned> subset) {
  Prop3Report report;
  report.nvars = nvars;
  report.subset.assign(subset.begin(), subset.end());
  mpz_class nfact = factorial_z(nvars);
  if (nfact > 24)
    throw_error(ErrorKind::SizeGuard, "prop3 literal verification bounded at nvars! <= 24");
  for (unsigned i : subset)
    if (i >= nvars) throw_error(ErrorKind::Precondition, "subset index out of range");

  const auto perms = all_permutations(nvars);
  const unsigned nperms = static_cast<unsigned>(perms.size());
  uint64_t smask = 0;
  for (unsigned i : subset) smask |= uint64_t{1} << i;
  const unsigned scard = static_cast<unsigned>(__builtin_popcountll(smask));

  // Z variables keyed by (row, permutation rank); Y variables by
  // (row, subset mask). A term is a pair of exponent maps.
  using ZMono = std::map<std::pair<unsigned, unsigned>, unsigned long>;
  using YMono = std::map<std::pair<unsigned, uint64_t>, unsigned long>;
  struct Term {
    ZMono z;
    YMono y;
  };

  // Expanded P_{subset S}(O_Z) = sum over R subset of S of prod_sigma
  // (monomial of sigma R in column lex(sigma)).
  std::vector<Term> terms;
  uint64_t r = smask;
  while (true) {
    Term term;
    for (unsigned c = 0; c < nperms; ++c) {
      uint64_t rr = r;
      while (rr) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(rr));
        rr &= rr - 1;
        ++term.z[{perms[c][i], c}];
      }
    }
    terms.push_back(std::move(term));
    if (r == 0) break;
    r = (r - 1) & smask;
  }

  // Relations, applied in decreasing cardinality of the set parameter:
  // prod_{i in W} Z[i, lex(sigma)] -> prod_{j in W} Y[j, lex(W)].
  for (unsigned card = scard;; --card) {
    for (uint64_t w = 0; w < (uint64_t{1} << nvars); ++w) {
      if (static_cast<unsigned>(__builtin_popcountll(w)) != card) continue;
      for (unsigned c = 0; c < nperms; ++c) {
        for (auto& term : terms) {
          while (true) {
            bool divisible = true;
            uint64_t ww = w;
            while (ww) {
              unsigned i = static_cast<unsigned>(__builtin_ctzll(ww));
              ww &= ww - 1;
              auto it = term.z.find({i, c});
              if (it == term.z.end() || it->second == 0) {
                divisible = false;
                break;
              }
            }
            if (!divisible) break;
            ww = w;
            while (ww) {
              unsigned i = static_cast<unsigned>(__builtin_ctzll(ww));
              ww &= ww - 1;
              auto it = term.z.find({i, c});
              if (--it->second == 0) term.z.erase(it);
              ++term.y[{i, w}];
            }
            if (w == 0) break;  // the empty relation consumes nothing
          }
        }
      }
    }
    if (card == 0) break;
  }

  // Collect the reduced polynomial as Y-monomial -> coefficient.
  std::map<YMono, mpz_class> reduced;
  bool leftover_z = false;
  for (const auto& term : terms) {
    if (!term.z.empty()) leftover_z = true;
    reduced[term.y] += 1;
  }

  // Closed form: sum_{t <= |S|} C(|S|, t) prod_{|W| = t}
  // (prod_{j in W} Y[j, lex(W)])^{(N - t)! * t!}.
  std::map<YMono, mpz_class> expected;
  for (unsigned t = 0; t <= scard; ++t) {
    mpz_class coeff;
    mpz_bin_uiui(coeff.get_mpz_t(), scard, t);
    mpz_class expz = factorial_z(nvars - t) * factorial_z(t);
    unsigned long exponent = expz.get_ui();
    report.exponents.push_back(exponent);
    YMono mono;
    for (uint64_t w = 0; w < (uint64_t{1} << nvars); ++w) {
      if (static_cast<unsigned>(__builtin_popcountll(w)) != t) continue;
      uint64_t ww = w;
      while (ww) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(ww));
        ww &= ww - 1;
        mono[{i, w}] += exponent;
      }
    }
    expected[mono] += coeff;
  }

  report.pass = !leftover_z && reduced == expected;
  report.detail = leftover_z ? "unreplaced Z variables remain"
                  : report.pass ? "canonical representative matches the closed form"
                                : "reduced polynomial differs from the closed form";
  return report;
}

LegendreBound legendre_lower_bound(unsigned n) {
  if (n == 0) throw_error(ErrorKind::Precondition, "legendre bound needs n >= 1");
  LegendreBound out;
  std::vector<bool> composite(n + 1, false);
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned long q = p * p; q <= n; q += p) composite[q] = true;
    unsigned long alpha = 0;
    for (unsigned long pk = p; pk <= n; pk *= p) {
      alpha += n / pk;
      if (pk > n / p) break;  // avoid overflow
    }
    out.exponents[p] = alpha;
    out.alpha_sum += alpha;
  }
  unsigned long edges = static_cast<unsigned long>(n) * (n - 1);
  out.bound = (1 + edges) * out.alpha_sum;
  return out;
}

std::vector<double> ConstraintSystem::evaluate(const NumericCircuit& c) const {
  EdgeSpace space(s.n);
  if (c.nvars != space.edge_count() || c.rho != rho || c.d != d)
    throw_error(ErrorKind::Precondition, "circuit shape does not match the constraint system");
  std::vector<double> coeffs = c.expand_reduced();
  auto edge_perms = induced_perms(space);
  std::vector<double> residuals;
  residuals.reserve(equations.size());
  for (const auto& eq : equations) {
    std::set<uint64_t> orb;
    for (const auto& ep : edge_perms) orb.insert(apply_edge_perm(ep, eq.class_rep));
    double sum = 0.0;
    for (uint64_t m : orb) sum += coeffs[m];
    if (eq.target_one)
      residuals.push_back(sum / static_cast<double>(orb.size()) - 1.0);
    else
      residuals.push_back(sum);
  }
  return residuals;
}

ConstraintSystem constraint_system(IsoKind kind, const GraphSet& s, unsigned rho, unsigned d) {
  check_vertices(s, kListingVertexGuard, "constraint system");
  EdgeSpace space(s.n);
  auto edge_perms = induced_perms(space);
  ConstraintSystem sys;
  sys.kind = kind;
  sys.s = s;
  sys.rho = rho;
  sys.d = d;
  sys.unknown_count = static_cast<unsigned long>(rho) * d * (1 + space.edge_count());

  uint64_t s_rep = canonical_in_orbit(edge_perms, s.edges);

  auto accepted = [&](uint64_t rep) {
    switch (kind) {
      case IsoKind::Iso: return rep == s_rep;
      case IsoKind::Sub: {
        // rep accepted iff some relabeling of rep is a subset of S.
        for (const auto& ep : edge_perms)
          if ((apply_edge_perm(ep, rep) & ~s.edges) == 0) return true;
        return false;
      }
      case IsoKind::Super: {
        for (const auto& ep : edge_perms)
          if ((apply_edge_perm(ep, s.edges) & ~rep) == 0) return true;
        return false;
      }
    }
    return false;
  };

  for (uint64_t rep : iso_classes(s.n)) {
    bool acc = accepted(rep);
    unsigned card = static_cast<unsigned>(__builtin_popcountll(rep));
    // Rejected classes enter only up to degree d (no larger monomial can
    // appear in a depth-d product); the super kind keeps the whole class
    // list on both sides of the count.
    bool keep = acc || kind == IsoKind::Super || card <= d;
    if (!keep) continue;
    std::set<uint64_t> orb;
    for (const auto& ep : edge_perms) orb.insert(apply_edge_perm(ep, rep));
    sys.equations.push_back({rep, static_cast<unsigned long>(orb.size()), acc});
  }
  return sys;
}

ResolventReport resolvent_check(const GraphSet& s, unsigned t_max) {
  if (s.n > 3)
    throw_error(ErrorKind::SizeGuard, "resolvent check enumerates S_{2C(n,2)}; n <= 3 required");
  if (t_max > 3)
    throw_error(ErrorKind::SizeGuard, "resolvent check bounded at t <= 3");
  EdgeSpace space(s.n);
  const unsigned e = space.edge_count();

  // Induced subgroup G_n as edge permutations, then coset representatives of
  // S_E / G_n: the lexicographically least member of each coset.
  auto group = induced_perms(space);
  std::sort(group.begin(), group.end());
  std::set<std::vector<unsigned>> group_set(group.begin(), group.end());

  std::vector<std::vector<unsigned>> coset_reps;
  std::set<std::vector<unsigned>> seen;
  std::vector<unsigned> perm(e);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (seen.count(perm)) continue;
    coset_reps.push_back(perm);
    for (const auto& g : group_set) {
      std::vector<unsigned> composed(e);
      for (unsigned i = 0; i < e; ++i) composed[i] = perm[g[i]];
      seen.insert(composed);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ResolventReport report;
  report.coset_count = static_cast<unsigned>(coset_reps.size());

  // z entries: sum over Lambda of the monomial sigma(Lambda(S)).
  std::vector<MLPoly> z;
  z.reserve(coset_reps.size());
  for (const auto& sigma : coset_reps) {
    MLPoly entry(e, kRationalRing);
    for (const auto& g : group_set) {
      Monomial mono;
      uint64_t bits = s.edges;
      while (bits) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        mono.bits |= uint64_t{1} << sigma[g[i]];
      }
      entry.add_term(mono, RingElem::integer(1));
    }
    z.push_back(std::move(entry));
  }

  // Elementary symmetric polynomials over the z list, reduced as we go.
  std::vector<MLPoly> elem(t_max + 1, MLPoly(e, kRationalRing));
  elem[0] = MLPoly::one(e, kRationalRing);
  for (const auto& zi : z)
    for (unsigned t = t_max; t >= 1; --t) {
      elem[t] = elem[t] + elem[t - 1] * zi;
      if (t == 1) break;
    }

  report.pass = true;
  for (unsigned t = 1; t <= t_max; ++t) {
    ResolventFit fit;
    fit.t = t;
    fit.fits = true;
    fit.binom.assign(e + 1, mpq_class(0));
    // The fit holds iff the coefficient depends only on the monomial size.
    std::vector<bool> fixed(e + 1, false);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
      unsigned card = static_cast<unsigned>(__builtin_popcountll(mask));
      RingElem c = elem[t].coefficient(Monomial{mask});
      mpq_class q = c.rational_value();
      if (!fixed[card]) {
        fit.binom[card] = q;
        fixed[card] = true;
      } else if (fit.binom[card] != q) {
        fit.fits = false;
        break;
      }
    }
    if (!fit.fits) report.pass = false;
    report.fits.push_back(std::move(fit));
  }
  return report;
}

}  // namespace pdeforge

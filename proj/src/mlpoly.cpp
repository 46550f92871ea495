#include "pdeforge/mlpoly.hpp"

#include <sstream>

namespace pdeforge {

Monomial Monomial::of(std::span<const unsigned> vars) {
  Monomial m;
  for (unsigned v : vars) {
    if (v >= kMaxVars)
      throw_error(ErrorKind::SizeGuard,
                  "variable index " + std::to_string(v) + " exceeds the 64-variable cap");
    m.bits |= uint64_t{1} << v;
  }
  return m;
}

std::vector<unsigned> Monomial::indices() const {
  std::vector<unsigned> out;
  uint64_t b = bits;
  while (b) {
    out.push_back(static_cast<unsigned>(__builtin_ctzll(b)));
    b &= b - 1;
  }
  return out;
}

std::string Monomial::str() const {
  if (bits == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (unsigned i : indices()) {
    if (!first) os << "*";
    os << "x" << i;
    first = false;
  }
  return os.str();
}

MLPoly::MLPoly(unsigned nvars, RingId ring) : nvars_(nvars), ring_(ring) {
  if (nvars > Monomial::kMaxVars)
    throw_error(ErrorKind::SizeGuard,
                "polynomial over " + std::to_string(nvars) + " variables exceeds the 64-variable cap");
}

MLPoly MLPoly::constant(unsigned nvars, RingElem c) {
  MLPoly p(nvars, c.ring());
  p.add_term(Monomial::empty(), c);
  return p;
}

MLPoly MLPoly::variable(unsigned nvars, unsigned i, RingId ring) {
  MLPoly p(nvars, ring);
  p.add_term(Monomial::single(i), RingElem::one(ring));
  return p;
}

unsigned MLPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void MLPoly::check_fits(Monomial m) const {
  if (nvars_ < Monomial::kMaxVars && (m.bits >> nvars_) != 0)
    throw_error(ErrorKind::Precondition, "monomial " + m.str() + " does not fit in " +
                                             std::to_string(nvars_) + " variables");
}

void MLPoly::add_term(Monomial mono, const RingElem& coeff) {
  check_fits(mono);
  if (coeff.ring() != ring_)
    throw_error(ErrorKind::IncompatibleRing,
                "coefficient ring " + coeff.ring().str() + " != polynomial ring " + ring_.str());
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MLPoly::check_same(const MLPoly& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw_error(ErrorKind::Precondition, "variable count mismatch: " + std::to_string(nvars_) +
                                             " vs " + std::to_string(rhs.nvars_));
  if (ring_ != rhs.ring_)
    throw_error(ErrorKind::IncompatibleRing,
                "ring mismatch: " + ring_.str() + " vs " + rhs.ring_.str());
}

MLPoly MLPoly::operator+(const MLPoly& rhs) const {
  check_same(rhs);
  MLPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

MLPoly MLPoly::operator-(const MLPoly& rhs) const {
  check_same(rhs);
  MLPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

MLPoly MLPoly::operator*(const MLPoly& rhs) const {
  check_same(rhs);
  MLPoly out(nvars_, ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma | mb, ca * cb);
  return out;
}

MLPoly MLPoly::scaled(const RingElem& c) const {
  MLPoly out(nvars_, ring_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

bool MLPoly::operator==(const MLPoly& rhs) const {
  return nvars_ == rhs.nvars_ && ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

RingElem MLPoly::coefficient(Monomial t) const {
  check_fits(t);
  auto it = terms_.find(t);
  if (it == terms_.end()) return RingElem::zero(ring_);
  return it->second;
}

RingElem MLPoly::evaluate(std::span<const RingElem> point) const {
  if (point.size() != nvars_)
    throw_error(ErrorKind::Precondition, "evaluation point has " + std::to_string(point.size()) +
                                             " entries, expected " + std::to_string(nvars_));
  RingElem acc = RingElem::zero(ring_);
  for (const auto& [m, c] : terms_) {
    RingElem v = c;
    for (unsigned i : m.indices()) v *= point[i];
    acc += v;
  }
  return acc;
}

MLPoly MLPoly::scale_vars(std::span<const RingElem> u, const RingElem& mu) const {
  if (u.size() != nvars_)
    throw_error(ErrorKind::Precondition, "scaling vector has " + std::to_string(u.size()) +
                                             " entries, expected " + std::to_string(nvars_));
  MLPoly out(nvars_, ring_);
  for (const auto& [m, c] : terms_) {
    RingElem v = c * mu;
    for (unsigned i : m.indices()) v *= u[i];
    out.add_term(m, v);
  }
  return out;
}

GeneralPoly::GeneralPoly(unsigned nvars, RingId ring, uint32_t exponent_cap)
    : nvars_(nvars), ring_(ring), cap_(exponent_cap) {}

GeneralPoly GeneralPoly::constant(unsigned nvars, RingElem c, uint32_t cap) {
  GeneralPoly p(nvars, c.ring(), cap);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

GeneralPoly GeneralPoly::monomial(unsigned nvars, const Exponents& e, RingElem c, uint32_t cap) {
  GeneralPoly p(nvars, c.ring(), cap);
  p.add_term(e, c);
  return p;
}

GeneralPoly GeneralPoly::from_mlpoly(const MLPoly& p, uint32_t cap) {
  GeneralPoly out(p.nvars(), p.ring(), cap);
  for (const auto& [m, c] : p.terms()) {
    Exponents e(p.nvars(), 0);
    for (unsigned i : m.indices()) e[i] = 1;
    out.add_term(std::move(e), c);
  }
  return out;
}

void GeneralPoly::add_term(Exponents e, const RingElem& coeff) {
  if (e.size() != nvars_)
    throw_error(ErrorKind::Precondition, "exponent vector length mismatch");
  for (uint32_t x : e)
    if (x > cap_)
      throw_error(ErrorKind::SizeGuard, "exponent " + std::to_string(x) +
                                            " exceeds the declared cap " + std::to_string(cap_));
  if (coeff.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GeneralPoly GeneralPoly::operator+(const GeneralPoly& rhs) const {
  GeneralPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

GeneralPoly GeneralPoly::operator*(const GeneralPoly& rhs) const {
  GeneralPoly out(nvars_, ring_, cap_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

GeneralPoly GeneralPoly::scaled(const RingElem& c) const {
  GeneralPoly out(nvars_, ring_, cap_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

GeneralPoly GeneralPoly::pow(unsigned e) const {
  GeneralPoly acc = constant(nvars_, RingElem::one(ring_), cap_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool GeneralPoly::operator==(const GeneralPoly& rhs) const {
  return nvars_ == rhs.nvars_ && ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

RingElem GeneralPoly::evaluate(std::span<const RingElem> point) const {
  if (point.size() != nvars_)
    throw_error(ErrorKind::Precondition, "evaluation point length mismatch");
  RingElem acc = RingElem::zero(ring_);
  for (const auto& [e, c] : terms_) {
    RingElem v = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) v *= point[i].pow(e[i]);
    acc += v;
  }
  return acc;
}

MLPoly GeneralPoly::reduce_multilinear() const {
  MLPoly out(nvars_, ring_);
  for (const auto& [e, c] : terms_) {
    Monomial m;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] >= 1) m.bits |= uint64_t{1} << i;
    out.add_term(m, c);
  }
  return out;
}

}  // namespace pdeforge

#include "pdeforge/ring.hpp"

#include <cmath>
#include <sstream>

namespace pdeforge {

std::string RingId::str() const {
  switch (tag) {
    case RingTag::GF2: return "gf2";
    case RingTag::Rational: return "q";
    case RingTag::Cyclotomic: return "cyclotomic(" + std::to_string(modulus) + ")";
  }
  return "?";
}

RingElem RingElem::cyclotomic(unsigned m, std::vector<mpq_class> coeffs) {
  if (m == 0) throw_error(ErrorKind::Precondition, "cyclotomic modulus must be >= 1");
  if (coeffs.size() != m)
    throw_error(ErrorKind::Precondition, "cyclotomic coefficient vector length must equal the modulus");
  for (auto& c : coeffs) c.canonicalize();
  return RingElem(Cyclo{std::move(coeffs)});
}

RingElem RingElem::root_of_unity(unsigned m, long e) {
  if (m == 0) throw_error(ErrorKind::Precondition, "cyclotomic modulus must be >= 1");
  std::vector<mpq_class> coeffs(m, mpq_class(0));
  long r = e % static_cast<long>(m);
  if (r < 0) r += m;
  coeffs[static_cast<size_t>(r)] = 1;
  return RingElem(Cyclo{std::move(coeffs)});
}

RingElem RingElem::zero(RingId ring) {
  switch (ring.tag) {
    case RingTag::GF2: return gf2(0);
    case RingTag::Rational: return rational(0);
    case RingTag::Cyclotomic:
      return cyclotomic(ring.modulus, std::vector<mpq_class>(ring.modulus, mpq_class(0)));
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingElem RingElem::one(RingId ring) {
  switch (ring.tag) {
    case RingTag::GF2: return gf2(1);
    case RingTag::Rational: return rational(1);
    case RingTag::Cyclotomic: return root_of_unity(ring.modulus, 0);
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingTag RingElem::tag() const {
  if (std::holds_alternative<Gf2>(payload_)) return RingTag::GF2;
  if (std::holds_alternative<mpq_class>(payload_)) return RingTag::Rational;
  return RingTag::Cyclotomic;
}

unsigned RingElem::modulus() const {
  if (const auto* c = std::get_if<Cyclo>(&payload_))
    return static_cast<unsigned>(c->coeffs.size());
  return 1;
}

bool RingElem::is_zero() const {
  if (const auto* g = std::get_if<Gf2>(&payload_)) return g->bit == 0;
  if (const auto* q = std::get_if<mpq_class>(&payload_)) return sgn(*q) == 0;
  for (const auto& c : std::get<Cyclo>(payload_).coeffs)
    if (sgn(c) != 0) return false;
  return true;
}

bool RingElem::is_one() const { return *this == one(ring()); }

void RingElem::check_compatible(const RingElem& rhs) const {
  if (tag() != rhs.tag() || modulus() != rhs.modulus())
    throw_error(ErrorKind::IncompatibleRing,
                "cannot combine " + ring().str() + " with " + rhs.ring().str());
}

RingElem RingElem::operator+(const RingElem& rhs) const {
  check_compatible(rhs);
  switch (tag()) {
    case RingTag::GF2:
      return gf2(std::get<Gf2>(payload_).bit ^ std::get<Gf2>(rhs.payload_).bit);
    case RingTag::Rational:
      return rational(std::get<mpq_class>(payload_) + std::get<mpq_class>(rhs.payload_));
    case RingTag::Cyclotomic: {
      Cyclo out = std::get<Cyclo>(payload_);
      const Cyclo& b = std::get<Cyclo>(rhs.payload_);
      for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
      return RingElem(std::move(out));
    }
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingElem RingElem::operator-() const {
  switch (tag()) {
    case RingTag::GF2: return *this;  // characteristic 2
    case RingTag::Rational: return rational(-std::get<mpq_class>(payload_));
    case RingTag::Cyclotomic: {
      Cyclo out = std::get<Cyclo>(payload_);
      for (auto& c : out.coeffs) c = -c;
      return RingElem(std::move(out));
    }
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

RingElem RingElem::operator*(const RingElem& rhs) const {
  check_compatible(rhs);
  switch (tag()) {
    case RingTag::GF2:
      return gf2(std::get<Gf2>(payload_).bit & std::get<Gf2>(rhs.payload_).bit);
    case RingTag::Rational:
      return rational(std::get<mpq_class>(payload_) * std::get<mpq_class>(rhs.payload_));
    case RingTag::Cyclotomic: {
      // Cyclic convolution: exponents reduce by z^m = 1.
      const auto& a = std::get<Cyclo>(payload_).coeffs;
      const auto& b = std::get<Cyclo>(rhs.payload_).coeffs;
      const size_t m = a.size();
      std::vector<mpq_class> out(m, mpq_class(0));
      for (size_t i = 0; i < m; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < m; ++j) {
          if (sgn(b[j]) == 0) continue;
          out[(i + j) % m] += a[i] * b[j];
        }
      }
      return RingElem(Cyclo{std::move(out)});
    }
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

bool RingElem::operator==(const RingElem& rhs) const {
  if (tag() != rhs.tag() || modulus() != rhs.modulus()) return false;
  return payload_ == rhs.payload_;
}

RingElem RingElem::pow(unsigned long e) const {
  RingElem acc = one(ring());
  RingElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool RingElem::pow_m_is_unit(unsigned long m) const { return pow(m).is_one(); }

int RingElem::gf2_value() const {
  if (tag() != RingTag::GF2) throw_error(ErrorKind::IncompatibleRing, "not a GF(2) element");
  return std::get<Gf2>(payload_).bit;
}

const mpq_class& RingElem::rational_value() const {
  if (tag() != RingTag::Rational) throw_error(ErrorKind::IncompatibleRing, "not a rational element");
  return std::get<mpq_class>(payload_);
}

const std::vector<mpq_class>& RingElem::cyclo_coeffs() const {
  if (tag() != RingTag::Cyclotomic)
    throw_error(ErrorKind::IncompatibleRing, "not a cyclotomic element");
  return std::get<Cyclo>(payload_).coeffs;
}

double RingElem::to_double() const {
  switch (tag()) {
    case RingTag::GF2: return gf2_value();
    case RingTag::Rational: return rational_value().get_d();
    case RingTag::Cyclotomic: {
      const auto& c = cyclo_coeffs();
      const size_t m = c.size();
      double re = 0.0, im = 0.0;
      for (size_t e = 0; e < m; ++e) {
        double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(m);
        double v = c[e].get_d();
        re += v * std::cos(angle);
        im += v * std::sin(angle);
      }
      if (std::abs(im) > 1e-9)
        throw_error(ErrorKind::Precondition, "cyclotomic value has no real embedding");
      return re;
    }
  }
  throw_error(ErrorKind::Internal, "bad ring tag");
}

std::string RingElem::str() const {
  switch (tag()) {
    case RingTag::GF2: return std::to_string(gf2_value());
    case RingTag::Rational: return rational_to_string(rational_value());
    case RingTag::Cyclotomic: {
      std::ostringstream os;
      os << "[";
      const auto& c = cyclo_coeffs();
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << rational_to_string(c[i]);
      }
      os << "]@" << c.size();
      return os.str();
    }
  }
  return "?";
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw_error(ErrorKind::Parse, "malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw_error(ErrorKind::Parse, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace pdeforge

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pdeforge/error.hpp"

namespace pdeforge {

enum class RingTag : uint8_t { GF2, Rational, Cyclotomic };

// Identifies a coefficient ring: the tag plus, for cyclotomic, the modulus m
// of Q[z]/(z^m - 1).
struct RingId {
  RingTag tag = RingTag::Rational;
  unsigned modulus = 1;  // meaningful for Cyclotomic only

  friend bool operator==(const RingId&, const RingId&) = default;
  std::string str() const;
};

inline constexpr RingId kRationalRing{RingTag::Rational, 1};
inline constexpr RingId kGf2Ring{RingTag::GF2, 1};

// Exact element of GF(2), Q, or Q[z]/(z^m - 1).
//
// The cyclotomic ring is the full quotient by z^m - 1, not by the m-th
// cyclotomic polynomial: roots of unity stay componentwise exact, at the cost
// of zero-divisors. Equality is componentwise, never by division.
class RingElem {
public:
  RingElem() : payload_(mpq_class(0)) {}

  static RingElem gf2(int bit) { return RingElem(Gf2{static_cast<uint8_t>(bit & 1)}); }
  static RingElem rational(mpq_class q) {
    q.canonicalize();
    return RingElem(std::move(q));
  }
  static RingElem integer(long v) { return rational(mpq_class(v)); }
  static RingElem cyclotomic(unsigned m, std::vector<mpq_class> coeffs);
  // zeta_m^e, with e taken mod m.
  static RingElem root_of_unity(unsigned m, long e);
  static RingElem zero(RingId ring);
  static RingElem one(RingId ring);

  RingTag tag() const;
  RingId ring() const { return RingId{tag(), modulus()}; }
  unsigned modulus() const;

  bool is_zero() const;
  bool is_one() const;

  RingElem operator+(const RingElem& rhs) const;
  RingElem operator-() const;
  RingElem operator-(const RingElem& rhs) const { return *this + (-rhs); }
  RingElem operator*(const RingElem& rhs) const;
  RingElem& operator+=(const RingElem& rhs) { return *this = *this + rhs; }
  RingElem& operator*=(const RingElem& rhs) { return *this = *this * rhs; }
  bool operator==(const RingElem& rhs) const;
  bool operator!=(const RingElem& rhs) const { return !(*this == rhs); }

  RingElem pow(unsigned long e) const;
  // True iff a^m is the multiplicative identity, computed exactly.
  bool pow_m_is_unit(unsigned long m) const;

  int gf2_value() const;
  const mpq_class& rational_value() const;
  const std::vector<mpq_class>& cyclo_coeffs() const;

  // Numeric view; cyclotomic elements project onto the real embedding
  // z -> exp(2*pi*i/m) and require a (near-)real value.
  double to_double() const;

  std::string str() const;

private:
  struct Gf2 {
    uint8_t bit = 0;
    friend bool operator==(const Gf2&, const Gf2&) = default;
  };
  struct Cyclo {
    std::vector<mpq_class> coeffs;  // length m >= 1
    friend bool operator==(const Cyclo& a, const Cyclo& b) {
      return a.coeffs == b.coeffs;
    }
  };

  explicit RingElem(Gf2 g) : payload_(g) {}
  explicit RingElem(mpq_class q) : payload_(std::move(q)) {}
  explicit RingElem(Cyclo c) : payload_(std::move(c)) {}

  void check_compatible(const RingElem& rhs) const;

  std::variant<Gf2, mpq_class, Cyclo> payload_;
};

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

}  // namespace pdeforge

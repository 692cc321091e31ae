#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hopfca/errors.hpp"

namespace hopfca {

// The ground field k: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  unsigned long characteristic = 0;  // 0 for Q, p for F_p

  bool operator==(const FieldSpec&) const = default;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime_field(unsigned long p);  // throws BadParams if p is not prime

  std::string str() const;
};

// One exact field element.  Rationals are kept in lowest terms with positive
// denominator (mpq_class canonical form), prime-field elements as residues in
// [0, p), so operator== is representational equality.
class Scalar {
 public:
  Scalar() = default;  // zero over Q; prefer the named constructors
  static Scalar zero(const FieldSpec& f) { return from_long(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_long(f, 1); }
  static Scalar from_long(const FieldSpec& f, long v);
  static Scalar from_ratio(const FieldSpec& f, long num, long den);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& v);
  // Accepts "n", "-n", "n/d"; for F_p the value is reduced mod p.
  static Scalar from_string(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws SingularMatrix on 0 divisor
  Scalar operator-() const;
  Scalar inv() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "p/q" over the rationals (plain integer when the denominator is 1),
  // the residue as an integer over F_p.
  std::string str() const;

  // Rational value (rationals only) and residue (prime fields only).
  const mpq_class& rational() const { return q_; }
  unsigned long residue() const { return r_; }

 private:
  void check_same(const Scalar& o) const;

  FieldSpec spec_;
  mpq_class q_;
  unsigned long r_ = 0;
};

}  // namespace hopfca

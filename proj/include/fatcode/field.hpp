#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fatcode/errors.hpp"

namespace fatcode {

// The two coefficient domains everything runs over: the rationals, or a
// prime field GF(p) with p < 2^31 so that products of residues fit in a
// signed 64-bit intermediate.
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::int64_t p = 0;  // modulus, 0 for the rationals

  static FieldSpec rationals() { return FieldSpec{Kind::Rational, 0}; }

  // Validates primality (trial division; the bound 2^31 keeps this cheap).
  static FieldSpec prime(std::int64_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  bool is_prime() const { return kind == Kind::Prime; }

  bool operator==(const FieldSpec& other) const {
    return kind == other.kind && p == other.p;
  }
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  std::string str() const;
};

// An exact field element tagged with its field. Rational values live in a
// GMP rational (always canonicalized by gmpxx); prime-field values are
// residues in [0, p). Mixed-field arithmetic throws FieldMismatch.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_integer(std::int64_t value, const FieldSpec& field);
  static Scalar from_rational(const mpq_class& value);
  static Scalar from_rational(std::int64_t num, std::int64_t den);
  static Scalar from_residue(std::int64_t value, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  // this -= a * b, the fused update at the heart of row reduction.
  void submul(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Accessors for the active payload; wrong-field access throws.
  const mpq_class& rational_value() const;
  std::int64_t residue_value() const;

  // Canonical text form: "num/den" with den omitted when 1, or the residue.
  std::string str() const;

 private:
  FieldSpec field_;
  mpq_class q_;
  std::int64_t r_ = 0;

  void check_same_field(const Scalar& other) const;
};

}  // namespace fatcode

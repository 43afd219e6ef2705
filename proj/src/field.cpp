#include "fatcode/field.hpp"

#include <sstream>

namespace fatcode {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNzd: return "NotNzd";
    case ErrorKind::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::UnknownDirective: return "UnknownDirective";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw Error(ErrorKind::NonPrime,
                "prime field modulus must satisfy 2 <= p < 2^31, got " +
                    std::to_string(p));
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw Error(ErrorKind::NonPrime,
                  std::to_string(p) + " is not prime (divisible by " +
                      std::to_string(d) + ")");
    }
  }
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
  if (is_rational()) return "rational";
  return "prime " + std::to_string(p);
}

namespace {

std::int64_t mod_reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid inverse of a modulo p, for a in (0, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, p);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(const FieldSpec& field) { return from_integer(1, field); }

Scalar Scalar::from_integer(std::int64_t value, const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(value));
  } else {
    s.r_ = mod_reduce(value, field.p);
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& value) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.q_ = value;
  return s;
}

Scalar Scalar::from_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::from_residue(std::int64_t value, const FieldSpec& field) {
  if (!field.is_prime()) {
    throw Error(ErrorKind::UnsupportedField, "from_residue needs a prime field");
  }
  return from_integer(value, field);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorKind::FieldMismatch,
                "cannot combine " + field_.str() + " with " + other.field_.str());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& other) const {
  Scalar s = *this;
  s += other;
  return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
  Scalar s = *this;
  s -= other;
  return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
  Scalar s = *this;
  s *= other;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    r_ = (r_ + other.r_) % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ -= other.q_;
  } else {
    r_ = mod_reduce(r_ - other.r_, field_.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = (r_ * other.r_) % field_.p;  // p < 2^31 keeps this in range
  }
  return *this;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (field_.is_rational()) {
    q_ -= a.q_ * b.q_;
  } else {
    r_ = mod_reduce(r_ - (a.r_ * b.r_) % field_.p, field_.p);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& other) const {
  check_same_field(other);
  return *this * other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  if (field_ != other.field_) return false;
  return field_.is_rational() ? q_ == other.q_ : r_ == other.r_;
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rational()) {
    throw Error(ErrorKind::UnsupportedField, "rational_value on a prime-field scalar");
  }
  return q_;
}

std::int64_t Scalar::residue_value() const {
  if (!field_.is_prime()) {
    throw Error(ErrorKind::UnsupportedField, "residue_value on a rational scalar");
  }
  return r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) {
    std::ostringstream out;
    out << q_;
    return out.str();
  }
  return std::to_string(r_);
}

}  // namespace fatcode

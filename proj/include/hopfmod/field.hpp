#pragma once

// Exact scalars over Q (GMP rationals) or a prime field F_p.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopfmod {

/// Raised when two operands live over different fields, or a scalar string is malformed.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws FieldError unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "F <p>", the header syntax of instance files.
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Accepts "7", "-3", "n/d". Over F_p the fraction is reduced mod p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over Q.
  const mpq_class& rational() const;
  /// Only valid over F_p.
  std::uint64_t residue() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  /// "n/d" or "n" over Q; the residue over F_p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace hopfmod

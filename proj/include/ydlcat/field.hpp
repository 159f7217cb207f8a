#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ydlcat {

/// Ground field of a computation: the rationals or a prime field F_p.
class FieldCtx {
 public:
  enum class Kind { Rational, Prime };

  static FieldCtx rational() { return FieldCtx(Kind::Rational, 0); }
  /// Throws UnsupportedField unless p is a prime below 2^31.
  static FieldCtx prime(std::int64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// p for F_p, 0 for the rationals.
  std::int64_t modulus() const { return modulus_; }
  std::int64_t characteristic() const { return modulus_; }

  /// "rational" or "prime <p>", the same spelling the file format uses.
  std::string to_string() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  friend class Scalar;
  FieldCtx(Kind kind, std::int64_t p) : kind_(kind), modulus_(p) {}

  Kind kind_;
  std::int64_t modulus_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator, using machine words while they fit and GMP beyond that;
/// prime-field residues live in [0, p). Arithmetic between scalars of
/// different fields throws FieldMismatch.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const FieldCtx& f) { return Scalar(f, 0); }
  static Scalar one(const FieldCtx& f) { return Scalar(f, 1); }

  Scalar(const FieldCtx& f, std::int64_t value);
  /// Throws Error on a zero denominator (or one divisible by p).
  Scalar(const FieldCtx& f, std::int64_t num, std::int64_t den);

  /// Accepts "n", "-n" or "n/d".
  static Scalar parse(const FieldCtx& f, std::string_view text);

  FieldCtx field() const;

  bool is_zero() const { return big_ == nullptr && num_ == 0; }
  bool is_one() const { return big_ == nullptr && num_ == 1 && den_ == 1; }

  Scalar inverse() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  static Scalar from_wide(std::int64_t modulus, __int128 num, __int128 den);
  static Scalar from_mpq(mpq_class value);
  mpq_class as_mpq() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::int64_t modulus_ = 0;
  // Set only for rationals that overflow the machine-word representation.
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace ydlcat

#include "ydlcat/field.hpp"

#include <charconv>
#include <numeric>

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_reduce(__int128 v, std::int64_t p) {
  __int128 r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  __int128 result = 1;
  __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool fits_int64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) &&
         v <= static_cast<__int128>(INT64_MAX);
}

mpq_class to_mpq(__int128 v) {
  // GMP has no 128-bit constructor; split into 64-bit halves.
  bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class z = (hi << 64) + lo;
  if (negative) z = -z;
  return mpq_class(z);
}

void check_same(std::int64_t a, std::int64_t b) {
  if (a != b) {
    throw FieldMismatch("scalar arithmetic across different fields");
  }
}

}  // namespace

FieldCtx FieldCtx::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw UnsupportedField("prime modulus must lie in [2, 2^31): " +
                           std::to_string(p));
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw UnsupportedField(std::to_string(p) + " is not prime");
    }
  }
  return FieldCtx(Kind::Prime, p);
}

std::string FieldCtx::to_string() const {
  return is_rational() ? "rational" : "prime " + std::to_string(modulus_);
}

Scalar::Scalar(const FieldCtx& f, std::int64_t value) : modulus_(f.modulus()) {
  num_ = modulus_ ? mod_reduce(value, modulus_) : value;
}

Scalar::Scalar(const FieldCtx& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  *this = from_wide(f.modulus(), num, den);
}

Scalar Scalar::from_wide(std::int64_t modulus, __int128 num, __int128 den) {
  Scalar s;
  s.modulus_ = modulus;
  if (modulus != 0) {
    std::int64_t d = mod_reduce(den, modulus);
    if (d == 0) throw Error("denominator divisible by the field characteristic");
    __int128 n = mod_reduce(num, modulus);
    s.num_ = static_cast<std::int64_t>(n * mod_pow(d, modulus - 2, modulus) %
                                       modulus);
    return s;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits_int64(num) && fits_int64(den)) {
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  return from_mpq(to_mpq(num) / to_mpq(den));
}

Scalar Scalar::from_mpq(mpq_class value) {
  value.canonicalize();
  Scalar s;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    s.num_ = n.get_si();
    s.den_ = d.get_si();
  } else {
    s.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return s;
}

mpq_class Scalar::as_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::parse(const FieldCtx& f, std::string_view text) {
  auto parse_int = [&](std::string_view part) -> mpz_class {
    if (part.empty()) throw Error("empty number in '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error("malformed number '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error("malformed number '" + std::string(text) + "'");
      }
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return mpz_class(digits);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1)
                                                  : parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  if (f.is_rational()) return from_mpq(mpq_class(num, den));
  mpz_class p(static_cast<long>(f.modulus()));
  mpz_class n = num % p;
  mpz_class d = den % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  return from_wide(f.modulus(), n.get_si(), d.get_si());
}

FieldCtx Scalar::field() const {
  return modulus_ ? FieldCtx(FieldCtx::Kind::Prime, modulus_)
                  : FieldCtx::rational();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (big_) {
    Scalar s = from_mpq(1 / *big_);
    return s;
  }
  return from_wide(modulus_, den_, num_);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a.modulus_, b.modulus_);
  if (a.modulus_) {
    Scalar s = a;
    s.num_ = mod_reduce(static_cast<__int128>(a.num_) + b.num_, a.modulus_);
    return s;
  }
  if (a.big_ || b.big_) return Scalar::from_mpq(a.as_mpq() + b.as_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    return Scalar::from_wide(0, static_cast<__int128>(a.num_) + b.num_, 1);
  }
  __int128 n = static_cast<__int128>(a.num_) * b.den_ +
               static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Scalar::from_wide(0, n, d);
}

Scalar operator-(const Scalar& a) {
  if (a.modulus_) {
    Scalar s = a;
    s.num_ = a.num_ == 0 ? 0 : a.modulus_ - a.num_;
    return s;
  }
  if (a.big_) return Scalar::from_mpq(-*a.big_);
  return Scalar::from_wide(0, -static_cast<__int128>(a.num_), a.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a.modulus_, b.modulus_);
  if (a.modulus_) {
    Scalar s = a;
    s.num_ = static_cast<std::int64_t>(static_cast<__int128>(a.num_) * b.num_ %
                                       a.modulus_);
    return s;
  }
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.big_ || b.big_) return Scalar::from_mpq(a.as_mpq() * b.as_mpq());
  return Scalar::from_wide(0, static_cast<__int128>(a.num_) * b.num_,
                           static_cast<__int128>(a.den_) * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same(a.modulus_, b.modulus_);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  check_same(a.modulus_, b.modulus_);
  if (a.big_ || b.big_) {
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace ydlcat

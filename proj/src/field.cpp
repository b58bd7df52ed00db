#include "hopfmod/field.hpp"

#include <charconv>

namespace hopfmod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw FieldError("field characteristic too large");
  return Field(p);
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F " + std::to_string(p_); }

Scalar Scalar::from_int(Field f, long v) {
  if (f.is_rational()) return Scalar(mpq_class(v));
  const auto p = f.characteristic();
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) return Scalar(q);
  const auto p = f.characteristic();
  const auto num = reduce(q.get_num(), p);
  const auto den = reduce(q.get_den(), p);
  if (den == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p));
  return Scalar(Residue{mulmod(num, powmod(den, p - 2, p), p), p});
}

Scalar Scalar::parse(Field f, std::string_view text) {
  if (text.empty()) throw FieldError("empty scalar");
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw FieldError("malformed scalar '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw FieldError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(f, q);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("rational() called on a residue");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldError("residue() called on a rational");
}

void Scalar::require_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index())
    throw FieldError("mixed fields");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->p != std::get<Residue>(o.value_).p) throw FieldError("mixed fields");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    const auto s = std::get<Residue>(o.value_).value;
    auto v = r->value + s;
    if (v >= r->p) v -= r->p;
    return Scalar(Residue{v, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{mulmod(r->value, std::get<Residue>(o.value_).value, r->p), r->p});
  return Scalar(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{powmod(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == std::get<Residue>(o.value_).value;
  return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace hopfmod

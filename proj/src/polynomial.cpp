#include "hopfmod/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfmod {

namespace {

Field field_of(const Poly& p) {
  if (p.empty()) throw std::invalid_argument("empty polynomial");
  return p.front().field();
}

Poly make_monic(const Poly& p) {
  const Scalar lead = p.back();
  Poly out;
  for (const auto& c : p) out.push_back(c / lead);
  return out;
}

bool divides(const Poly& d, const Poly& p) {
  const auto [q, r] = divide(p, d);
  return r.size() == 1 && r[0].is_zero();
}

// Monic divisor search over F_p, degrees 1..deg/2.
IrreducibilityResult search_modular(const Poly& p, std::size_t budget) {
  const Field f = field_of(p);
  const std::uint64_t q = f.characteristic();
  const std::size_t n = degree(p);
  std::size_t tried = 0;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
      if (++tried > budget) return {Irreducibility::unknown, std::nullopt};
      Poly g;
      for (auto x : digits) g.push_back(Scalar::from_int(f, static_cast<long>(x)));
      g.push_back(Scalar::one(f));
      if (divides(g, p)) return {Irreducibility::reducible, g};
      std::size_t i = 0;
      while (i < d && ++digits[i] == q) digits[i++] = 0;
      if (i == d) break;
    }
  }
  return {Irreducibility::irreducible, std::nullopt};
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Signed divisors of v (v != 0), positive first; empty if v is too large to factor by trial division.
std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> pos;
  if (v > mpz_class("1000000000000")) return {};
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      pos.push_back(d);
      if (d * d != v) pos.push_back(v / d);
    }
  }
  std::vector<mpz_class> out = pos;
  for (const auto& d : pos) out.push_back(-d);
  return out;
}

// Kronecker: a degree-d integer factor is determined by its values at d+1 points, each of
// which divides the polynomial's value there.
IrreducibilityResult search_rational(const Poly& p, std::size_t budget) {
  const Field f = Field::rationals();
  const std::size_t n = degree(p);
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ip;
  for (const auto& c : p) ip.push_back(mpz_class(c.rational() * den));

  std::vector<mpz_class> points;
  for (long k = 0; points.size() < n / 2 + 1; ++k) {
    const mpz_class a = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k + 1) / 2);
    if (eval_int(ip, a) == 0) {
      Poly g{Scalar::from_rational(f, mpq_class(-a)), Scalar::one(f)};
      if (n > 1) return {Irreducibility::reducible, g};
      return {Irreducibility::irreducible, std::nullopt};
    }
    points.push_back(a);
  }
  std::size_t tried = 0;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::vector<mpz_class>> choices;
    for (std::size_t i = 0; i <= d; ++i) {
      auto divs = divisors(eval_int(ip, points[i]));
      if (divs.empty()) return {Irreducibility::unknown, std::nullopt};
      if (i == 0) divs.resize(divs.size() / 2);  // g and -g give the same factor
      choices.push_back(std::move(divs));
    }
    std::vector<std::size_t> pick(d + 1, 0);
    while (true) {
      if (++tried > budget) return {Irreducibility::unknown, std::nullopt};
      // Lagrange interpolation through (points[i], choices[i][pick[i]]).
      Poly g(d + 1, Scalar::zero(f));
      for (std::size_t i = 0; i <= d; ++i) {
        Poly basis{Scalar::one(f)};
        mpq_class denom = 1;
        for (std::size_t j = 0; j <= d; ++j) {
          if (j == i) continue;
          basis = multiply(basis, Poly{Scalar::from_rational(f, mpq_class(-points[j])), Scalar::one(f)});
          denom *= mpq_class(points[i] - points[j]);
        }
        const Scalar w = Scalar::from_rational(f, mpq_class(choices[i][pick[i]]) / denom);
        for (std::size_t k = 0; k < basis.size(); ++k) g[k] += basis[k] * w;
      }
      g = trim(g);
      if (degree(g) == d && divides(g, p)) return {Irreducibility::reducible, make_monic(g)};
      std::size_t i = 0;
      while (i <= d && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i > d) break;
    }
  }
  return {Irreducibility::irreducible, std::nullopt};
}

}  // namespace

std::size_t degree(const Poly& p) {
  const Poly t = trim(p);
  return t.empty() ? 0 : t.size() - 1;
}

Poly trim(Poly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

Poly multiply(const Poly& a, const Poly& b) {
  const Field f = field_of(a);
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
  const Poly d = trim(b);
  if (d.size() == 1 && d[0].is_zero()) throw std::domain_error("polynomial division by zero");
  const Field f = field_of(a);
  Poly r = trim(a);
  if (r.size() < d.size()) return {Poly{Scalar::zero(f)}, r};
  Poly q(r.size() - d.size() + 1, Scalar::zero(f));
  const Scalar lead_inv = d.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar c = r[k + d.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  return {trim(q), trim(r)};
}

std::string to_string(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = p[i].is_one() && i > 0;
    if (!unit) os << "(" << p[i].to_string() << ")";
    if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

IrreducibilityResult irreducibility(const Poly& p, std::size_t budget) {
  const Poly t = trim(p);
  if (degree(t) == 0) throw std::invalid_argument("irreducibility of a constant polynomial");
  if (degree(t) == 1) return {Irreducibility::irreducible, std::nullopt};
  const Poly monic = make_monic(t);
  return field_of(t).is_rational() ? search_rational(monic, budget) : search_modular(monic, budget);
}

}  // namespace hopfmod

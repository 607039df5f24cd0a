#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace glk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what_budget, std::int64_t needed, std::int64_t budget)
      : Error("budget exceeded: " + what_budget + " needs " + std::to_string(needed) +
              " > budget " + std::to_string(budget)),
        budget_name(what_budget) {}
  std::string budget_name;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Canonical element of a field: reduced fraction, residue in [0,p), or
/// reduced polynomial of degree < deg(minpoly). Equality is representational.
class Scalar {
 public:
  Scalar() = default;  // null scalar, placeholder for containers only

  bool valid() const { return field_ != nullptr; }
  const FieldPtr& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  // payload accessors (canonical representation)
  const Rational& rat() const { return rat_; }
  std::int64_t residue() const { return res_; }
  const std::vector<Scalar>& coeffs() const { return ext_; }

 private:
  explicit Scalar(FieldPtr f) : field_(std::move(f)) {}

  FieldPtr field_;
  Rational rat_;             // over the rationals
  std::int64_t res_ = 0;     // over a prime field
  std::vector<Scalar> ext_;  // over an extension, size == degree, coeffs over base

  friend class Field;
  friend struct PrimeReduction;
};

inline bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// A field given by its construction: the rationals, F_p with p prime >= 5,
/// or a simple extension base[t]/(minpoly) with minpoly monic irreducible.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Rationals, Prime, Extension };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;          // Kind::Prime
  FieldPtr base;               // Kind::Extension
  std::vector<Scalar> minpoly; // Kind::Extension, monic, coefficients low -> high

  static FieldPtr rationals();
  static FieldPtr prime(std::int64_t p);
  /// Checks monic, degree >= 2 and irreducibility over base; throws Error otherwise.
  static FieldPtr extension(const FieldPtr& base, const std::vector<Scalar>& minpoly);

  int degree() const { return kind == Kind::Extension ? int(minpoly.size()) - 1 : 1; }
  std::int64_t characteristic() const {
    switch (kind) {
      case Kind::Rationals: return 0;
      case Kind::Prime: return p;
      case Kind::Extension: return base->characteristic();
    }
    return 0;
  }
  bool finite() const { return characteristic() != 0; }
  int absolute_degree() const {
    return kind == Kind::Extension ? degree() * base->absolute_degree() : 1;
  }
  /// |F| for finite fields; throws for infinite or non-representable orders.
  std::int64_t order() const {
    if (!finite()) throw Error("order(): field is infinite");
    if (kind == Kind::Prime) return p;
    std::int64_t b = base->order(), r = 1;
    for (int i = 0; i < degree(); ++i) {
      if (r > (std::int64_t(1) << 62) / b) throw Error("order(): field order overflow");
      r *= b;
    }
    return r;
  }

  bool same(const Field& o) const;
  bool same(const FieldPtr& o) const { return same(*o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_rational(const Rational& q) const;
  /// Generator t of an extension field.
  Scalar gen() const;
  /// Builds the canonical element from base-field coefficients (low -> high, size <= degree).
  Scalar from_coeffs(std::vector<Scalar> c) const;
  /// Enumeration of a finite field, index in [0, order).
  Scalar element_by_index(std::int64_t idx) const;

  std::string str() const;

 private:
  Field() = default;
  friend class Scalar;
};

namespace detail {

inline void require_same_field(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid()) throw Error("operation on null scalar");
  if (a.field().get() != b.field().get() && !a.field()->same(b.field()))
    throw Error("scalar field mismatch: " + a.field()->str() + " vs " + b.field()->str());
}

inline std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return std::int64_t((__int128)a * b % p);
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error("mod_inv: not invertible");
  return mod_norm(t, p);
}

inline BigInt mod_big(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace detail

// ---- dense polynomial helpers over Scalar coefficients (low -> high, trimmed) ----

namespace poly {

using P = std::vector<Scalar>;

inline void trim(P& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}
inline int deg(const P& v) { return int(v.size()) - 1; }  // -1 for zero

inline P add(const P& a, const P& b) {
  P r = a.size() >= b.size() ? a : b;
  const P& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

inline P neg(const P& a) {
  P r = a;
  for (auto& c : r) c = -c;
  return r;
}

inline P sub(const P& a, const P& b) { return add(a, neg(b)); }

inline P scale(const P& a, const Scalar& c) {
  if (c.is_zero()) return {};
  P r = a;
  for (auto& x : r) x = x * c;
  return r;
}

inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, a[0].field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

inline void divmod(const P& a, const P& b, P* q, P* r) {
  if (b.empty()) throw Error("polynomial division by zero");
  P rem = a, quot;
  Scalar lead_inv = b.back().inverse();
  if (deg(a) >= deg(b)) quot.assign(a.size() - b.size() + 1, b[0].field()->zero());
  while (deg(rem) >= deg(b)) {
    int shift = deg(rem) - deg(b);
    Scalar c = rem.back() * lead_inv;
    quot[shift] = quot[shift] + c;
    for (std::size_t i = 0; i < b.size(); ++i)
      rem[i + shift] = rem[i + shift] - c * b[i];
    trim(rem);
  }
  trim(quot);
  if (q) *q = quot;
  if (r) *r = rem;
}

inline P mod(const P& a, const P& b) {
  P r;
  divmod(a, b, nullptr, &r);
  return r;
}

inline P monic(const P& a) {
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

inline P gcd(P a, P b) {
  trim(a), trim(b);
  while (!b.empty()) {
    P r = mod(a, b);
    a = b;
    b = r;
  }
  return monic(a);
}

/// Returns monic g with s*a + t*b = g.
inline P ext_gcd(const P& a, const P& b, P* s, P* t) {
  if (a.empty() && b.empty()) throw Error("ext_gcd of zero polynomials");
  const Scalar one = (!a.empty() ? a[0] : b[0]).field()->one();
  P r0 = a, r1 = b;
  P s0 = {one}, s1 = {};
  P t0 = {}, t1 = {one};
  trim(r0), trim(r1);
  while (!r1.empty()) {
    P q;
    divmod(r0, r1, &q, nullptr);
    P r2 = sub(r0, mul(q, r1));
    P s2 = sub(s0, mul(q, s1));
    P t2 = sub(t0, mul(q, t1));
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.empty()) throw Error("ext_gcd of zero polynomials");
  Scalar inv = r0.back().inverse();
  if (s) *s = scale(s0, inv);
  if (t) *t = scale(t0, inv);
  return scale(r0, inv);
}

/// x^e mod f by square-and-multiply; e may be huge.
inline P x_pow_mod(const BigInt& e, const P& f) {
  const Scalar one = f[0].field()->one();
  P result = {one};
  if (e == 0) return mod(result, f);
  P base = mod(P{f[0].field()->zero(), one}, f);
  BigInt k = e;
  std::vector<bool> bits;
  while (k > 0) {
    bits.push_back((k & 1) != 0);
    k >>= 1;
  }
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    result = mod(mul(result, result), f);
    if (*it) result = mod(mul(result, base), f);
  }
  return result;
}

inline Scalar eval(const P& a, const Scalar& x) {
  Scalar acc = x.field()->zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace poly

// ---- Scalar implementation ----

inline bool Scalar::is_zero() const {
  if (!valid()) throw Error("is_zero on null scalar");
  switch (field_->kind) {
    case Field::Kind::Rationals: return rat_ == 0;
    case Field::Kind::Prime: return res_ == 0;
    case Field::Kind::Extension:
      for (const auto& c : ext_)
        if (!c.is_zero()) return false;
      return true;
  }
  return false;
}

inline bool Scalar::is_one() const { return *this == field_->one(); }

inline Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_->kind) {
    case Field::Kind::Rationals: r.rat_ = -rat_; break;
    case Field::Kind::Prime: r.res_ = res_ == 0 ? 0 : field_->p - res_; break;
    case Field::Kind::Extension:
      for (auto& c : r.ext_) c = -c;
      break;
  }
  return r;
}

inline Scalar Scalar::operator+(const Scalar& o) const {
  detail::require_same_field(*this, o);
  Scalar r = *this;
  switch (field_->kind) {
    case Field::Kind::Rationals: r.rat_ = rat_ + o.rat_; break;
    case Field::Kind::Prime: r.res_ = detail::mod_norm(res_ + o.res_, field_->p); break;
    case Field::Kind::Extension:
      for (std::size_t i = 0; i < ext_.size(); ++i) r.ext_[i] = ext_[i] + o.ext_[i];
      break;
  }
  return r;
}

inline Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

inline Scalar Scalar::operator*(const Scalar& o) const {
  detail::require_same_field(*this, o);
  Scalar r = *this;
  switch (field_->kind) {
    case Field::Kind::Rationals: r.rat_ = rat_ * o.rat_; break;
    case Field::Kind::Prime: r.res_ = detail::mod_mul(res_, o.res_, field_->p); break;
    case Field::Kind::Extension: {
      poly::P a(ext_.begin(), ext_.end()), b(o.ext_.begin(), o.ext_.end());
      poly::trim(a), poly::trim(b);
      poly::P prod = poly::mul(a, b);
      poly::P m(field_->minpoly.begin(), field_->minpoly.end());
      poly::P rem = poly::mod(prod, m);
      rem.resize(field_->degree(), field_->base->zero());
      r.ext_.assign(rem.begin(), rem.end());
      break;
    }
  }
  return r;
}

inline Scalar Scalar::inverse() const {
  if (!valid()) throw Error("inverse of null scalar");
  if (is_zero()) throw Error("inverse of zero");
  Scalar r = *this;
  switch (field_->kind) {
    case Field::Kind::Rationals: r.rat_ = Rational(1) / rat_; break;
    case Field::Kind::Prime: r.res_ = detail::mod_inv(res_, field_->p); break;
    case Field::Kind::Extension: {
      poly::P a(ext_.begin(), ext_.end());
      poly::trim(a);
      poly::P m(field_->minpoly.begin(), field_->minpoly.end());
      poly::P s, t;
      poly::P g = poly::ext_gcd(a, m, &s, &t);
      if (poly::deg(g) != 0) throw Error("inverse: gcd with minpoly not constant");
      poly::P inv = poly::mod(s, m);
      inv.resize(field_->degree(), field_->base->zero());
      r.ext_.assign(inv.begin(), inv.end());
      break;
    }
  }
  return r;
}

inline Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

inline Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = field_->one(), b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

inline bool Scalar::operator==(const Scalar& o) const {
  detail::require_same_field(*this, o);
  switch (field_->kind) {
    case Field::Kind::Rationals: return rat_ == o.rat_;
    case Field::Kind::Prime: return res_ == o.res_;
    case Field::Kind::Extension:
      for (std::size_t i = 0; i < ext_.size(); ++i)
        if (!(ext_[i] == o.ext_[i])) return false;
      return true;
  }
  return false;
}

inline std::string Scalar::str() const {
  if (!valid()) return "<null>";
  switch (field_->kind) {
    case Field::Kind::Rationals: return rational_str(rat_);
    case Field::Kind::Prime: return std::to_string(res_);
    case Field::Kind::Extension: {
      std::string s = "[";
      for (std::size_t i = 0; i < ext_.size(); ++i) {
        if (i) s += ",";
        s += ext_[i].str();
      }
      return s + "]";
    }
  }
  return "?";
}

// ---- Field implementation ----

inline FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind = Kind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

inline FieldPtr Field::prime(std::int64_t p) {
  if (p < 5) throw Error("prime field requires p >= 5 (got " + std::to_string(p) + ")");
  if (!is_prime_int(p)) throw Error("prime field requires p prime (got " + std::to_string(p) + ")");
  static std::mutex mu;
  static std::map<std::int64_t, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->kind = Kind::Prime;
  f->p = p;
  cache[p] = f;
  return f;
}

inline bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Rationals: return true;
    case Kind::Prime: return p == o.p;
    case Kind::Extension: {
      if (!base->same(*o.base)) return false;
      if (minpoly.size() != o.minpoly.size()) return false;
      for (std::size_t i = 0; i < minpoly.size(); ++i)
        if (!(minpoly[i] == o.minpoly[i])) return false;
      return true;
    }
  }
  return false;
}

inline Scalar Field::zero() const {
  Scalar s(shared_from_this());
  if (kind == Kind::Extension) s.ext_.assign(degree(), base->zero());
  return s;
}

inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(std::int64_t n) const {
  Scalar s(shared_from_this());
  switch (kind) {
    case Kind::Rationals: s.rat_ = n; break;
    case Kind::Prime: s.res_ = detail::mod_norm(n, p); break;
    case Kind::Extension:
      s.ext_.assign(degree(), base->zero());
      s.ext_[0] = base->from_int(n);
      break;
  }
  return s;
}

inline Scalar Field::from_rational(const Rational& q) const {
  Scalar s(shared_from_this());
  switch (kind) {
    case Kind::Rationals: s.rat_ = q; break;
    case Kind::Prime: {
      BigInt d = detail::mod_big(glk::denominator(q), p);
      if (d == 0) throw Error("denominator divisible by field characteristic");
      std::int64_t dn = d.convert_to<std::int64_t>();
      std::int64_t nn = detail::mod_big(glk::numerator(q), p).convert_to<std::int64_t>();
      s.res_ = detail::mod_mul(nn, detail::mod_inv(dn, p), p);
      break;
    }
    case Kind::Extension:
      s.ext_.assign(degree(), base->zero());
      s.ext_[0] = base->from_rational(q);
      break;
  }
  return s;
}

inline Scalar Field::gen() const {
  if (kind != Kind::Extension) throw Error("gen(): not an extension field");
  Scalar s(shared_from_this());
  s.ext_.assign(degree(), base->zero());
  s.ext_[1] = base->one();
  return s;
}

inline Scalar Field::from_coeffs(std::vector<Scalar> c) const {
  if (kind != Kind::Extension) throw Error("from_coeffs(): not an extension field");
  if (int(c.size()) > degree()) throw Error("from_coeffs(): too many coefficients");
  for (const auto& x : c)
    if (!x.field()->same(*base)) throw Error("from_coeffs(): coefficient not over base field");
  Scalar s(shared_from_this());
  s.ext_ = std::move(c);
  s.ext_.resize(degree(), base->zero());
  return s;
}

inline Scalar Field::element_by_index(std::int64_t idx) const {
  switch (kind) {
    case Kind::Rationals: throw Error("element_by_index: field is infinite");
    case Kind::Prime:
      if (idx < 0 || idx >= p) throw Error("element_by_index out of range");
      return from_int(idx);
    case Kind::Extension: {
      std::int64_t b = base->order();
      Scalar s(shared_from_this());
      s.ext_.assign(degree(), base->zero());
      for (int i = 0; i < degree(); ++i) {
        s.ext_[i] = base->element_by_index(idx % b);
        idx /= b;
      }
      if (idx != 0) throw Error("element_by_index out of range");
      return s;
    }
  }
  throw Error("unreachable");
}

inline std::string Field::str() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p);
    case Kind::Extension: {
      std::string s = base->str() + "[t]/(";
      for (std::size_t i = 0; i < minpoly.size(); ++i) {
        if (i) s += ",";
        s += minpoly[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

// ---- reduction of characteristic-0 towers modulo a rational prime ----
// Maps Q -> F_p (when denominators avoid p) and each tower generator to a chosen
// root of its reduced minimal polynomial in F_p. Used for irreducibility
// certificates and for finite-field reductions of algebras over Q-towers.

struct PrimeReduction {
  std::int64_t p = 0;
  FieldPtr fp;
  FieldPtr source;
  std::vector<std::int64_t> roots;  // per extension level, innermost first

  static std::optional<PrimeReduction> make(const FieldPtr& src, std::int64_t pp) {
    PrimeReduction red;
    red.p = pp;
    red.fp = Field::prime(pp);
    red.source = src;
    // collect the tower, innermost extension first
    std::vector<const Field*> chain;
    const Field* f = src.get();
    while (f->kind == Field::Kind::Extension) {
      chain.push_back(f);
      f = f->base.get();
    }
    if (f->kind == Field::Kind::Prime) {
      if (f->p != pp) return std::nullopt;
    }
    std::reverse(chain.begin(), chain.end());
    for (const Field* level : chain) {
      // reduce minpoly with roots chosen so far, then pick the first root in F_p
      std::vector<std::int64_t> coeffs;
      coeffs.reserve(level->minpoly.size());
      for (const auto& c : level->minpoly) {
        auto rc = red.reduce_int(c);
        if (!rc) return std::nullopt;
        coeffs.push_back(*rc);
      }
      std::optional<std::int64_t> root;
      for (std::int64_t x = 0; x < pp; ++x) {
        std::int64_t acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          acc = detail::mod_norm(detail::mod_mul(acc, x, pp) + *it, pp);
        if (acc == 0) {
          root = x;
          break;
        }
      }
      if (!root) return std::nullopt;
      red.roots.push_back(*root);
    }
    return red;
  }

  /// Reduces a scalar over the source field (or any field in its tower) to F_p.
  /// Returns nullopt when a denominator is divisible by p.
  std::optional<std::int64_t> reduce_int(const Scalar& s) const {
    switch (s.field()->kind) {
      case Field::Kind::Rationals: {
        BigInt d = detail::mod_big(glk::denominator(s.rat_), p);
        if (d == 0) return std::nullopt;
        std::int64_t nn = detail::mod_big(glk::numerator(s.rat_), p).convert_to<std::int64_t>();
        return detail::mod_mul(nn, detail::mod_inv(d.convert_to<std::int64_t>(), p), p);
      }
      case Field::Kind::Prime:
        return s.residue();
      case Field::Kind::Extension: {
        int level = 0;
        const Field* f = s.field().get();
        while (f->base->kind == Field::Kind::Extension) {
          ++level;
          f = f->base.get();
        }
        if (level >= int(roots.size())) return std::nullopt;
        std::int64_t r = roots[level], acc = 0;
        for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
          auto c = reduce_int(*it);
          if (!c) return std::nullopt;
          acc = detail::mod_norm(detail::mod_mul(acc, r, p) + *c, p);
        }
        return acc;
      }
    }
    return std::nullopt;
  }

  std::optional<Scalar> reduce(const Scalar& s) const {
    auto v = reduce_int(s);
    if (!v) return std::nullopt;
    return fp->from_int(*v);
  }
};

// ---- irreducibility ----

namespace detail {

/// Complete test over finite fields: f irreducible iff x^{q^n} = x (mod f) and
/// gcd(x^{q^{n/t}} - x, f) = 1 for every prime t | n.
inline bool irreducible_finite(const FieldPtr& base, const poly::P& f) {
  int n = poly::deg(f);
  BigInt q = base->order();
  const Scalar one = base->one();
  poly::P x = {base->zero(), one};
  // x^{q^n} == x mod f
  BigInt qe = 1;
  for (int i = 0; i < n; ++i) qe *= q;
  poly::P diff = poly::sub(poly::x_pow_mod(qe, f), poly::mod(x, f));
  poly::trim(diff);
  if (!diff.empty()) return false;
  for (int t = 2; t <= n; ++t) {
    if (n % t != 0 || !is_prime_int(t)) continue;
    BigInt e = 1;
    for (int i = 0; i < n / t; ++i) e *= q;
    poly::P g = poly::gcd(poly::sub(poly::x_pow_mod(e, f), x), f);
    if (poly::deg(g) != 0) return false;
  }
  return true;
}

/// Rational root existence for a monic polynomial over Q (complete; used for
/// cubic irreducibility). Throws if coefficient factoring exceeds the bound.
inline bool has_rational_root(const poly::P& f) {
  // clear denominators: g = L*f with integer coefficients, leading L
  BigInt lcm = 1;
  for (const auto& c : f) {
    BigInt d = glk::denominator(c.rat());
    lcm = boost::multiprecision::lcm(lcm, d);
  }
  std::vector<BigInt> g;
  for (const auto& c : f) g.push_back(glk::numerator(c.rat()) * (lcm / glk::denominator(c.rat())));
  BigInt a0 = g.front(), an = g.back();
  if (a0 == 0) return true;  // root 0
  auto divisors = [](BigInt n) {
    n = boost::multiprecision::abs(n);
    std::vector<BigInt> ds;
    if (n > BigInt(1) << 50) throw Error("rational root test: constant term too large");
    for (BigInt d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };
  for (const BigInt& num : divisors(a0))
    for (const BigInt& den : divisors(an))
      for (int sgn : {1, -1}) {
        Rational r(num * sgn, den);
        Rational acc = 0;
        for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * r + Rational(*it);
        if (acc == 0) return true;
      }
  return false;
}

inline bool irreducible_over(const FieldPtr& base, const poly::P& f) {
  int n = poly::deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (base->finite()) return irreducible_finite(base, f);
  // characteristic zero
  if (base->kind == Field::Kind::Rationals) {
    if (n == 2) {
      // x^2+bx+c reducible iff b^2-4c is a rational square
      Rational b = f[1].rat() / f[2].rat(), c = f[0].rat() / f[2].rat();
      return !is_square_rational(b * b - 4 * c);
    }
    if (n == 3) {
      poly::P m = poly::monic(f);
      try {
        return !has_rational_root(m);
      } catch (const Error&) {
        // fall through to the modular certificate
      }
    }
  }
  // modular certificate: irreducible mod p for some good prime implies
  // irreducibility over the characteristic-zero tower (monic case)
  static const int certificate_primes[] = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (int pp : certificate_primes) {
    auto red = PrimeReduction::make(base, pp);
    if (!red) continue;
    poly::P rf;
    bool ok = true;
    for (const auto& c : f) {
      auto rc = red->reduce(c);
      if (!rc) {
        ok = false;
        break;
      }
      rf.push_back(*rc);
    }
    if (!ok) continue;
    poly::trim(rf);
    if (poly::deg(rf) != n) continue;  // leading coefficient vanished
    if (irreducible_finite(red->fp, rf)) return true;
  }
  throw Error("cannot certify irreducibility of minpoly (degree-bounded check exhausted)");
}

}  // namespace detail

inline FieldPtr Field::extension(const FieldPtr& base, const std::vector<Scalar>& minpoly) {
  if (minpoly.size() < 3) throw Error("extension minpoly must have degree >= 2");
  for (const auto& c : minpoly)
    if (!c.valid() || !c.field()->same(*base))
      throw Error("extension minpoly coefficients must lie in the base field");
  if (!(minpoly.back() == base->one())) throw Error("extension minpoly must be monic");
  poly::P m(minpoly.begin(), minpoly.end());
  if (!detail::irreducible_over(base, m)) throw Error("reducible minpoly");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind = Kind::Extension;
  f->base = base;
  f->minpoly = minpoly;
  return f;
}

}  // namespace glk

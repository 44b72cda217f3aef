#pragma once

// Exact sparse Laurent polynomial arithmetic over arbitrary-precision
// integers, in one variable (A or t) and in two variables (A, u), plus
// extraction of the coefficients of the formal expansion p(e^x).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotoid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : std::uint8_t { A, t, u };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::A: return "A";
    case Var::t: return "t";
    default: return "u";
  }
}

/// One-variable Laurent polynomial with integer coefficients.
/// Zero coefficients are never stored.
class Laurent1 {
 public:
  explicit Laurent1(Var var = Var::A) : var_(var) {}

  static Laurent1 zero(Var var) { return Laurent1(var); }

  static Laurent1 constant(Var var, BigInt c) {
    Laurent1 p(var);
    p.add_term(0, std::move(c));
    return p;
  }

  /// c * x^e
  static Laurent1 monomial(Var var, int exponent, BigInt c = 1) {
    Laurent1 p(var);
    p.add_term(exponent, std::move(c));
    return p;
  }

  Var var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }

  BigInt coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = terms_[exponent];
    slot += c;
    if (slot == 0) terms_.erase(exponent);
  }

  Laurent1& operator+=(const Laurent1& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Laurent1& operator-=(const Laurent1& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }

  friend Laurent1 operator-(const Laurent1& a) {
    Laurent1 r(a.var_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    Laurent1 r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Laurent1& operator*=(const Laurent1& rhs) { return *this = *this * rhs; }

  Laurent1 pow(int n) const {
    if (n < 0) throw std::invalid_argument("Laurent1::pow: negative power");
    Laurent1 r = constant(var_, 1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Substitution x -> x^{-1}; an involution.
  Laurent1 substitute_inverse() const {
    Laurent1 r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  int min_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.begin()->first;
  }
  int max_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }
  /// Largest |exponent| with nonzero coefficient; 0 for the zero polynomial.
  int max_abs_degree() const {
    if (terms_.empty()) return 0;
    int lo = terms_.begin()->first, hi = terms_.rbegin()->first;
    return std::max(std::abs(lo), std::abs(hi));
  }

  friend bool operator==(const Laurent1& a, const Laurent1& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent1& a, const Laurent1& b) { return !(a == b); }

  /// Terms sorted by descending exponent, constant term last,
  /// e.g. "-A^10 + A^6 + A^4", "t^3 + t^-3 - 2".
  std::string str() const;

 private:
  std::map<int, BigInt> terms_;
  Var var_;
};

/// Two-variable Laurent polynomial in (A, u).
class Laurent2 {
 public:
  using Key = std::pair<int, int>;  // (A-exponent, u-exponent)

  Laurent2() = default;

  static Laurent2 constant(BigInt c) {
    Laurent2 p;
    p.add_term(0, 0, std::move(c));
    return p;
  }

  static Laurent2 monomial(int exp_a, int exp_u, BigInt c = 1) {
    Laurent2 p;
    p.add_term(exp_a, exp_u, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, BigInt>& terms() const { return terms_; }

  BigInt coeff(int exp_a, int exp_u) const {
    auto it = terms_.find({exp_a, exp_u});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(int exp_a, int exp_u, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = terms_[{exp_a, exp_u}];
    slot += c;
    if (slot == 0) terms_.erase({exp_a, exp_u});
  }

  Laurent2& operator+=(const Laurent2& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
  }

  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }

  friend Laurent2 operator-(const Laurent2& a) {
    Laurent2 r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }

  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  Laurent2& operator*=(const Laurent2& rhs) { return *this = *this * rhs; }

  /// Specialize u = 1, collapsing to a polynomial in A.
  Laurent1 specialize_u1() const {
    Laurent1 r(Var::A);
    for (const auto& [k, c] : terms_) r.add_term(k.first, c);
    return r;
  }

  friend bool operator==(const Laurent2& a, const Laurent2& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<Key, BigInt> terms_;
};

namespace detail {

inline void append_term(std::ostringstream& out, bool first, const BigInt& c,
                        const std::string& var_part) {
  bool neg = c < 0;
  BigInt mag = neg ? BigInt(-c) : c;
  if (first) {
    if (neg) out << '-';
  } else {
    out << (neg ? " - " : " + ");
  }
  if (var_part.empty()) {
    out << mag;
  } else {
    if (mag != 1) out << mag;
    out << var_part;
  }
}

inline std::string power_str(const char* name, int e) {
  if (e == 0) return "";
  std::ostringstream os;
  os << name;
  if (e != 1) os << '^' << e;
  return os.str();
}

}  // namespace detail

inline std::string Laurent1::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponents, with the constant term (if any) printed last.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->first == 0) continue;
    detail::append_term(out, first, it->second, detail::power_str(var_name(var_), it->first));
    first = false;
  }
  if (auto it = terms_.find(0); it != terms_.end()) {
    detail::append_term(out, first, it->second, "");
  }
  return out.str();
}

inline std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  // Sort by descending A-exponent, then descending u-exponent; pure constant last.
  std::map<std::pair<int, int>, BigInt> ordered;
  for (const auto& [k, c] : terms_) ordered.emplace(std::make_pair(-k.first, -k.second), c);
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    int ea = -k.first, eu = -k.second;
    if (ea == 0 && eu == 0) continue;
    std::string part = detail::power_str("A", ea);
    std::string upart = detail::power_str("u", eu);
    if (!part.empty() && !upart.empty()) part += ' ';
    part += upart;
    detail::append_term(out, first, c, part);
    first = false;
  }
  if (auto it = terms_.find({0, 0}); it != terms_.end()) {
    detail::append_term(out, first, it->second, "");
  }
  return out.str();
}

namespace detail {
inline BigInt int_pow(long long base, int n) {
  BigInt r = 1, b = base;
  for (int i = 0; i < n; ++i) r *= b;
  return r;
}
inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace detail

/// Coefficient of x^n in p(e^x): (1/n!) * sum_l c_l * l^n.
inline Rational exp_coeff(const Laurent1& p, int n) {
  if (n < 0) throw std::invalid_argument("exp_coeff: n must be >= 0");
  BigInt s = 0;
  for (const auto& [l, c] : p.terms()) s += c * detail::int_pow(l, n);
  return Rational(s, detail::factorial(n));
}

/// Coefficient of x^k in p(e^x, u) as a map u-exponent -> rational:
/// t_{k,l} = (1/k!) * sum_a c_{a,l} * a^k.
inline std::map<int, Rational> exp_coeff2(const Laurent2& p, int k) {
  if (k < 0) throw std::invalid_argument("exp_coeff2: k must be >= 0");
  std::map<int, BigInt> sums;
  for (const auto& [key, c] : p.terms()) sums[key.second] += c * detail::int_pow(key.first, k);
  std::map<int, Rational> out;
  BigInt kf = detail::factorial(k);
  for (const auto& [l, s] : sums) {
    if (s != 0) out.emplace(l, Rational(s, kf));
  }
  return out;
}

}  // namespace knotoid

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pertinent/numeric.hpp"

namespace pertinent {

/// Dense univariate polynomial with exact coefficients; index = power.
/// The coefficient vector never ends in a zero (the zero polynomial is empty).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T coeff, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  // (a + b x)^k
  static Polynomial binomial_power(const T& a, const T& b, unsigned k) {
    std::vector<T> c(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
      T term = T(binomial(k, i));
      for (unsigned p = 0; p < i; ++p) term *= b;
      for (unsigned p = i; p < k; ++p) term *= a;
      c[i] = std::move(term);
    }
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : T(0); }
  const T& leading() const { return c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b.scaled(a.c_[0]);
    if (b.c_.size() == 1) return a.scaled(b.c_[0]);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  Polynomial scaled(const T& s) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result(T(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  // Horner evaluation in the argument's number type.
  template <class U>
  U evaluate(const U& x) const {
    U acc = U(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  // "1 + 12*t + 60*t^2"
  std::string to_string(std::string_view var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      T mag = c_[i] < 0 ? T(-c_[i]) : c_[i];
      if (s.empty()) {
        if (c_[i] < 0) s += "-";
      } else {
        s += c_[i] < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (i == 0 || !unit) s += pertinent::to_string(mag);
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

}  // namespace pertinent

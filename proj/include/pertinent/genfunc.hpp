#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pertinent/coefficient_table.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/polynomial.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

inline constexpr int kMaxSeriesDim = 24;

/// Truncated power series in z whose z^n coefficient is stored as an integer
/// polynomial a_n(t) standing for a_n(t) / (n! (1+t)^C(n,2)).
///
/// In this basis the product of two series is the weighted convolution
///   c_n = sum_j C(n,j) (1+t)^(j(n-j)) a_j b_(n-j),
/// so every intermediate value stays in Z[t].
class WeightedSeries {
 public:
  explicit WeightedSeries(std::vector<IntPolynomial> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DimensionError("weighted series needs at least one term");
  }

  // 1 + 0 z + 0 z^2 + ...
  static WeightedSeries unit(std::size_t order) {
    std::vector<IntPolynomial> t(order + 1);
    t[0] = IntPolynomial(BigInt(1));
    return WeightedSeries(std::move(t));
  }

  std::size_t order() const noexcept { return terms_.size() - 1; }
  const IntPolynomial& term(std::size_t n) const { return terms_.at(n); }
  const std::vector<IntPolynomial>& terms() const noexcept { return terms_; }

  // Ordinary z-coefficients at t = 0, i.e. a_n(0) / n!.
  std::vector<Rational> at_t_zero() const {
    std::vector<Rational> r;
    r.reserve(terms_.size());
    for (std::size_t n = 0; n < terms_.size(); ++n) r.emplace_back(terms_[n].coefficient(0), factorial(static_cast<unsigned>(n)));
    return r;
  }

  friend bool operator==(const WeightedSeries&, const WeightedSeries&) = default;

 private:
  std::vector<IntPolynomial> terms_;
};

namespace detail {

// Memoised (1+t)^k, local to one computation.
class OnePlusTPowers {
 public:
  const IntPolynomial& get(unsigned k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, IntPolynomial::binomial_power(1, 1, k)).first;
    return it->second;
  }

 private:
  std::map<unsigned, IntPolynomial> cache_;
};

}  // namespace detail

/// Product under the weighted convolution, truncated to the shorter order.
inline WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  detail::OnePlusTPowers powers;
  std::vector<IntPolynomial> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    IntPolynomial sum;
    for (std::size_t j = 0; j <= n; ++j) {
      const auto k = static_cast<unsigned>(j * (n - j));
      sum += (powers.get(k) * a.term(j) * b.term(n - j)).scaled(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    }
    c[n] = std::move(sum);
  }
  return WeightedSeries(std::move(c));
}

/// Z(z, t) = sum z^n / (n! (1+t)^C(n,2)): every stored term is 1.
inline WeightedSeries z_series(std::size_t order) {
  return WeightedSeries(std::vector<IntPolynomial>(order + 1, IntPolynomial(BigInt(1))));
}

/// Z(-z, t): stored terms (-1)^n.
inline WeightedSeries z_series_neg(std::size_t order) {
  std::vector<IntPolynomial> t;
  t.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) t.emplace_back(BigInt(n % 2 ? -1 : 1));
  return WeightedSeries(std::move(t));
}

/// Multiplicative inverse under the weighted convolution:
///   R_0 = 1,  R_n = -sum_{k=1..n} C(n,k) (1+t)^(k(n-k)) S_k R_(n-k).
inline WeightedSeries reciprocal(const WeightedSeries& s) {
  if (s.term(0) != IntPolynomial(BigInt(1))) throw DomainError("reciprocal needs a unit constant term");
  detail::OnePlusTPowers powers;
  const std::size_t order = s.order();
  std::vector<IntPolynomial> r(order + 1);
  r[0] = IntPolynomial(BigInt(1));
  for (std::size_t n = 1; n <= order; ++n) {
    IntPolynomial sum;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s.term(k).is_zero() || r[n - k].is_zero()) continue;
      const auto w = static_cast<unsigned>(k * (n - k));
      sum += (powers.get(w) * s.term(k) * r[n - k]).scaled(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    }
    r[n] = -sum;
  }
  return WeightedSeries(std::move(r));
}

/// Edge-count polynomial of labelled acyclic digraphs on n vertices,
/// sum_e (#DAGs with e edges) t^e, read off the reciprocal of Z(-z, t).
inline IntPolynomial dag_edge_polynomial(int n) {
  if (n < 1 || n > kMaxSeriesDim) {
    throw DimensionError("series route supports 1 <= n <= 24, got " + std::to_string(n));
  }
  return reciprocal(z_series_neg(static_cast<std::size_t>(n))).term(static_cast<std::size_t>(n));
}

/// The table of family C pertinent counts through the series route.
inline CoefficientTable count_dags_by_series(int n) {
  const IntPolynomial y = dag_edge_polynomial(n);
  const TypeSpec spec = TypeSpec::make(Family::C, n);
  if (y.degree() != spec.i_max()) {
    throw std::logic_error("edge polynomial degree " + std::to_string(y.degree()) + " differs from i_max " +
                           std::to_string(spec.i_max()));
  }
  return CoefficientTable(spec, y.coefficients(), Route::generating_function);
}

/// (1/e!) d^e p/dt^e at t = 0. Debug path mirroring coefficient extraction.
inline BigInt coefficient_by_derivative(const IntPolynomial& p, unsigned e) {
  IntPolynomial d = p;
  for (unsigned k = 0; k < e; ++k) d = d.derivative();
  const BigInt value = d.coefficient(0);
  const BigInt f = factorial(e);
  if (value % f != 0) throw std::logic_error("derivative at 0 not divisible by e!");
  return value / f;
}

}  // namespace pertinent

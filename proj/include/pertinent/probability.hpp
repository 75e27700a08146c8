#pragma once

#include <array>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pertinent/coefficient_table.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/polynomial.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

// coeff * r^r_power * (1-r)^complement_power
struct BernsteinTerm {
  BigInt coeff;
  int r_power = 0;
  int complement_power = 0;

  friend bool operator==(const BernsteinTerm&, const BernsteinTerm&) = default;
};

/// P(r) = sum_i E(i) r^i (1-r)^(m-i): the probability that a random matrix of
/// the family is pertinent when each variable element is non-zero with
/// probability r. Kept in the basis r^i (1-r)^(m-i); the monomial form is
/// only produced on request.
class ProbabilityPolynomial {
 public:
  explicit ProbabilityPolynomial(CoefficientTable table) : table_(std::move(table)) {}

  const TypeSpec& spec() const noexcept { return table_.spec(); }
  const CoefficientTable& table() const noexcept { return table_; }

  std::vector<BernsteinTerm> terms() const {
    std::vector<BernsteinTerm> t;
    const int m = spec().m();
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] != 0) t.push_back({table_[i], static_cast<int>(i), m - static_cast<int>(i)});
    }
    return t;
  }

  /// Exact value at rational r in [0, 1].
  Rational evaluate(const Rational& r) const {
    check_domain(r < 0 || r > 1);
    // With r = p/q: P = sum E(i) p^i (q-p)^(m-i) / q^m, all in integers.
    const BigInt p = boost::multiprecision::numerator(r);
    const BigInt q = boost::multiprecision::denominator(r);
    const BigInt qp = q - p;
    const int m = spec().m();
    std::vector<BigInt> comp(static_cast<std::size_t>(m) + 1);
    comp[0] = 1;
    for (int k = 1; k <= m; ++k) comp[k] = comp[k - 1] * qp;
    BigInt num = 0;
    BigInt ppow = 1;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      num += table_[i] * ppow * comp[m - static_cast<int>(i)];
      ppow *= p;
    }
    BigInt den = 1;
    for (int k = 0; k < m; ++k) den *= q;
    return Rational(num, den);
  }

  double evaluate(double r) const {
    check_domain(!(r >= 0.0 && r <= 1.0));
    const int m = spec().m();
    double sum = 0.0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const int k = static_cast<int>(i);
      sum += to_double(table_[i]) * ipow(r, k) * ipow(1.0 - r, m - k);
    }
    return sum;
  }

  /// Expansion in powers of r.
  IntPolynomial to_monomial() const {
    const int m = spec().m();
    IntPolynomial sum;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      const int k = static_cast<int>(i);
      sum += IntPolynomial::monomial(table_[i], static_cast<std::size_t>(k)) *
             IntPolynomial::binomial_power(1, -1, static_cast<unsigned>(m - k));
    }
    return sum;
  }

  // "1*(1-r)^12 + 12*r^1*(1-r)^11 + ..."
  std::string to_string() const {
    std::string s;
    for (const auto& t : terms()) {
      if (!s.empty()) s += " + ";
      s += t.coeff.str();
      if (t.r_power > 0) s += "*r^" + std::to_string(t.r_power);
      if (t.complement_power > 0) s += "*(1-r)^" + std::to_string(t.complement_power);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static void check_domain(bool outside) {
    if (outside) throw DomainError("probability argument r must lie in [0, 1]");
  }

  static double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  }

  CoefficientTable table_;
};

inline ProbabilityPolynomial build(const TypeSpec& spec, const CoefficientTable& table) {
  if (!(table.spec() == spec)) throw SpecViolation("table belongs to " + table.spec().name() + ", not " + spec.name());
  return ProbabilityPolynomial(table);
}

/// One row of the A/B/C curve for a fixed n.
struct CurveSample {
  Rational r;
  double pa = 0.0;
  double pb = 0.0;
  double pc = 0.0;
};

// 17 significant digits round-trip a double.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Grid points: 15 digits, so 0.98 prints as 0.98.
inline std::string format_grid(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// Interior grid step, 2*step, ... < 1.
inline std::vector<Rational> interior_grid(const Rational& step) {
  if (step <= 0 || step >= 1) throw DomainError("grid step must lie in (0, 1)");
  std::vector<Rational> g;
  for (Rational r = step; r < 1; r += step) g.push_back(r);
  return g;
}

/// Evaluates the three family polynomials on the interior grid and, if a sink
/// is given, writes the CSV "r,P_A,P_B,P_C" with LF line endings.
inline std::vector<CurveSample> emit_curve(const ProbabilityPolynomial& pa, const ProbabilityPolynomial& pb,
                                           const ProbabilityPolynomial& pc, const Rational& step,
                                           std::ostream* sink = nullptr) {
  if (pa.spec().family() != Family::A || pb.spec().family() != Family::B || pc.spec().family() != Family::C) {
    throw SpecViolation("curve needs the A, B and C polynomials in that order");
  }
  std::vector<CurveSample> samples;
  for (const Rational& r : interior_grid(step)) {
    samples.push_back({r, to_double(pa.evaluate(r)), to_double(pb.evaluate(r)), to_double(pc.evaluate(r))});
  }
  if (sink) {
    *sink << "r,P_A,P_B,P_C\n";
    for (const auto& s : samples) {
      *sink << format_grid(to_double(s.r)) << ',' << format_double(s.pa) << ',' << format_double(s.pb) << ','
            << format_double(s.pc) << '\n';
    }
  }
  return samples;
}

/// P_A > P_B > P_C and P_A - P_B > P_B - P_C.
inline bool chain_holds(const Rational& a, const Rational& b, const Rational& c) {
  return a > b && b > c && (a - b) > (b - c);
}

/// Where the ordering chain settles on a grid scan. first_stable is the
/// smallest grid point from which the chain holds at every later grid point;
/// last_failure is the grid point just before it (the largest failure).
struct ChainBoundary {
  std::optional<Rational> last_failure;
  std::optional<Rational> first_stable;
  std::size_t samples = 0;
  std::size_t failures = 0;

  bool ever_stable() const { return first_stable.has_value(); }
};

/// Scans lo, lo+step, ... <= hi with exact evaluation.
inline ChainBoundary find_order_violation(const ProbabilityPolynomial& pa, const ProbabilityPolynomial& pb,
                                          const ProbabilityPolynomial& pc, const Rational& lo, const Rational& hi,
                                          const Rational& step) {
  if (step <= 0) throw DomainError("grid step must be positive");
  if (lo < 0 || hi > 1 || lo > hi) throw DomainError("scan interval must satisfy 0 <= lo <= hi <= 1");
  ChainBoundary b;
  for (Rational r = lo; r <= hi; r += step) {
    ++b.samples;
    if (chain_holds(pa.evaluate(r), pb.evaluate(r), pc.evaluate(r))) {
      if (!b.first_stable) b.first_stable = r;
    } else {
      ++b.failures;
      b.last_failure = r;
      b.first_stable.reset();
    }
  }
  return b;
}

}  // namespace pertinent

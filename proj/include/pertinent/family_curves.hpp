#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "pertinent/enumeration.hpp"
#include "pertinent/genfunc.hpp"
#include "pertinent/parallel.hpp"
#include "pertinent/probability.hpp"

namespace pertinent {

/// P_A, P_B, P_C for dimension n. A and B come from enumeration, C from the
/// series route.
inline std::array<ProbabilityPolynomial, 3> family_polynomials(int n, const ParallelOptions& opt = {}) {
  return {ProbabilityPolynomial(count_pertinent(TypeSpec::make(Family::A, n), opt)),
          ProbabilityPolynomial(count_pertinent(TypeSpec::make(Family::B, n), opt)),
          ProbabilityPolynomial(count_dags_by_series(n))};
}

inline std::vector<CurveSample> emit_curve(int n, const Rational& step, std::ostream* sink,
                                           const ParallelOptions& opt = {}) {
  const auto p = family_polynomials(n, opt);
  return emit_curve(p[0], p[1], p[2], step, sink);
}

inline ChainBoundary find_order_violation(int n, const Rational& lo, const Rational& hi, const Rational& step,
                                          const ParallelOptions& opt = {}) {
  const auto p = family_polynomials(n, opt);
  return find_order_violation(p[0], p[1], p[2], lo, hi, step);
}

}  // namespace pertinent

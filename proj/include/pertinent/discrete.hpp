#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/enumeration.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/permanent.hpp"
#include "pertinent/polynomial.hpp"
#include "pertinent/rational_matrix.hpp"
#include "pertinent/report.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

// Largest number of assignments a discrete or pattern scan may visit.
inline constexpr std::uint64_t kAssignmentBudget = 20'000'000;

/// The set variable elements are drawn from. Always contains 0, which occurs
/// with probability 1 - r.
///
/// Discrete sets list their values; each non-zero value x carries a weight
/// w_x (weights sum to 1) and occurs with probability w_x * r. Continuous sets
/// are intervals [lo, hi]; only the fact that every single non-zero value has
/// probability zero matters.
class ValueSet {
 public:
  enum class Kind { continuous, discrete };

  static ValueSet interval(Rational lo, Rational hi) {
    if (!(lo <= 0 && 0 <= hi && lo < hi)) throw SpecViolation("interval must be non-degenerate and contain 0");
    ValueSet v(Kind::continuous);
    v.lo_ = std::move(lo);
    v.hi_ = std::move(hi);
    return v;
  }

  // Uniform weights over the non-zero values.
  static ValueSet discrete(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::pair<Rational, Rational>> weighted;
    const auto nonzero = static_cast<long long>(values.size()) - (std::binary_search(values.begin(), values.end(), Rational(0)) ? 1 : 0);
    for (auto& x : values) weighted.emplace_back(x, x == 0 || nonzero == 0 ? Rational(0) : Rational(1, nonzero));
    return discrete_weighted(std::move(weighted));
  }

  // (value, weight) pairs; the weight of 0 is ignored.
  static ValueSet discrete_weighted(std::vector<std::pair<Rational, Rational>> weighted) {
    ValueSet v(Kind::discrete);
    Rational sum = 0;
    for (auto& [x, w] : weighted) {
      if (x == 0) continue;
      if (w <= 0) throw SpecViolation("weight of " + pertinent::to_string(x) + " must be positive");
      if (!v.weights_.emplace(x, w).second) throw SpecViolation("value " + pertinent::to_string(x) + " listed twice");
      sum += w;
    }
    if (!v.weights_.empty() && sum != 1) throw SpecViolation("weights of the non-zero values must sum to 1");
    v.values_.push_back(0);
    for (const auto& [x, w] : v.weights_) v.values_.push_back(x);
    std::sort(v.values_.begin(), v.values_.end());
    return v;
  }

  /// "[0,2]" is an interval; "0,1/2@1/2,2@1/2" or "0,1/2,2" a discrete set.
  /// 0 is added to a discrete set if missing.
  static ValueSet parse(std::string_view literal) {
    std::string_view s = detail::trim(literal);
    if (s.empty()) throw ParseError("empty value-set literal");
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("interval literal must end with ']'");
      s = s.substr(1, s.size() - 2);
      const auto comma = s.find(',');
      if (comma == std::string_view::npos) throw ParseError("interval literal needs two end points");
      return interval(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    }
    if (s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    std::vector<std::pair<Rational, std::optional<Rational>>> items;
    while (!s.empty()) {
      const auto comma = s.find(',');
      std::string_view item = detail::trim(s.substr(0, comma));
      s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
      if (item.empty()) throw ParseError("empty element in value-set literal");
      if (const auto at = item.find('@'); at != std::string_view::npos) {
        items.emplace_back(parse_rational(item.substr(0, at)), parse_rational(item.substr(at + 1)));
      } else {
        items.emplace_back(parse_rational(item), std::nullopt);
      }
    }
    const bool any_weight = std::any_of(items.begin(), items.end(), [](const auto& i) { return i.second.has_value(); });
    std::vector<Rational> plain;
    std::vector<std::pair<Rational, Rational>> weighted;
    for (auto& [x, w] : items) {
      if (any_weight && x != 0 && !w) throw ParseError("either every non-zero value carries @weight or none does");
      plain.push_back(x);
      weighted.emplace_back(x, w.value_or(Rational(0)));
    }
    if (std::none_of(plain.begin(), plain.end(), [](const Rational& x) { return x == 0; })) {
      plain.emplace_back(0);
      weighted.emplace_back(0, 0);
    }
    return any_weight ? discrete_weighted(std::move(weighted)) : discrete(std::move(plain));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_discrete() const noexcept { return kind_ == Kind::discrete; }

  // Discrete sets only: ascending, including 0.
  const std::vector<Rational>& values() const {
    require_discrete();
    return values_;
  }

  bool has_nonzero() const { return is_discrete() ? values_.size() > 1 : true; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& x) const {
    if (is_discrete()) return std::binary_search(values_.begin(), values_.end(), x);
    return lo_ <= x && x <= hi_;
  }

  /// p(x) as a polynomial in r: 1 - r for x = 0, w_x r otherwise.
  RationalPolynomial probability_of(const Rational& x) const {
    require_discrete();
    if (x == 0) return RationalPolynomial(std::vector<Rational>{1, -1});
    const auto it = weights_.find(x);
    if (it == weights_.end()) return {};
    return RationalPolynomial::monomial(it->second, 1);
  }

  std::string to_string() const {
    if (!is_discrete()) return "[" + pertinent::to_string(lo_) + "," + pertinent::to_string(hi_) + "]";
    std::string s = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += pertinent::to_string(values_[i]);
    }
    return s + "}";
  }

 private:
  explicit ValueSet(Kind k) : kind_(k) {}

  void require_discrete() const {
    if (!is_discrete()) throw SpecViolation("operation needs a discrete value set");
  }

  Kind kind_;
  std::vector<Rational> values_;
  std::map<Rational, Rational> weights_;
  Rational lo_ = 0;
  Rational hi_ = 0;
};

/// The matrices attaining the least-modulus determinant u with positive
/// probability.
///
/// Discrete value sets list explicit rational matrices. Continuous value sets
/// and binarized (tilde) sets list 0/1 support patterns; for a continuous set
/// each pattern stands for the class of matrices whose non-zero variable
/// elements sit at its 1-bits.
struct OmegaSet {
  enum class Representation { matrices, patterns };

  TypeSpec spec;
  ValueSet xset;
  Rational u;
  bool binarized = false;
  Representation representation = Representation::patterns;
  std::vector<RationalMatrix> matrices;
  std::vector<BinaryMatrix> patterns;

  std::size_t size() const {
    return representation == Representation::matrices ? matrices.size() : patterns.size();
  }

  // Number of non-zero variable elements of a member.
  int nonzero_count(std::size_t k) const {
    if (representation == Representation::patterns) return (patterns[k] & spec.variable_mask()).count_ones();
    return (support(matrices[k]) & spec.variable_mask()).count_ones();
  }

  /// sizes[i] = number of members with i non-zero variable elements, i = 0..m.
  std::vector<std::size_t> partition_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(spec.m()) + 1, 0);
    for (std::size_t k = 0; k < size(); ++k) ++sizes[static_cast<std::size_t>(nonzero_count(k))];
    return sizes;
  }

  std::vector<BinaryMatrix> member_supports() const {
    if (representation == Representation::patterns) return patterns;
    std::vector<BinaryMatrix> s;
    for (const auto& m : matrices) s.push_back(support(m));
    return s;
  }

  bool contains(const RationalMatrix& m) const {
    return std::find(matrices.begin(), matrices.end(), m) != matrices.end();
  }
  bool contains(const BinaryMatrix& b) const { return std::find(patterns.begin(), patterns.end(), b) != patterns.end(); }
};

namespace detail {

// Least modulus with the positive sign preferred on ties.
inline bool better_u(const Rational& candidate, const std::optional<Rational>& best) {
  if (!best) return true;
  const Rational a = abs(candidate);
  const Rational b = abs(*best);
  if (a != b) return a < b;
  return candidate > *best;
}

inline std::vector<std::pair<int, int>> variable_positions(const TypeSpec& spec) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= spec.n(); ++i)
    for (int j = 1; j <= spec.n(); ++j)
      if (spec.variable_mask()(i, j)) pos.emplace_back(i, j);
  return pos;
}

inline void check_budget(std::uint64_t base, int exponent) {
  std::uint64_t total = 1;
  for (int k = 0; k < exponent; ++k) {
    if (total > kAssignmentBudget / std::max<std::uint64_t>(base, 1)) {
      throw BudgetExceeded("enumeration of " + std::to_string(base) + "^" + std::to_string(exponent) +
                           " assignments exceeds the budget of 2e7");
    }
    total *= base;
  }
}

// Determinants of matrices whose entries come from a fixed finite set of
// rationals. Entries are scaled by the lcm L of their denominators and the
// integer matrix is reduced with Bareiss' fraction-free elimination in
// 128-bit arithmetic; det = det(L*M) / L^n. Falls back to rational elimination
// when the scaled entries are too large for the bound |minor| < 2^63.
class ScaledDeterminant {
 public:
  ScaledDeterminant(const std::vector<Rational>& entries, int n) : n_(n) {
    BigInt lcm = 1;
    for (const auto& x : entries) {
      const BigInt d = boost::multiprecision::denominator(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    BigInt max_abs = 0;
    for (const auto& x : entries) {
      const BigInt v = boost::multiprecision::abs(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
      if (v > max_abs) max_abs = v;
    }
    fast_ = n <= 5 && max_abs <= 256 && lcm <= 256;
    scale_ = lcm;
    scale_pow_ = 1;
    for (int k = 0; k < n; ++k) scale_pow_ *= lcm;
  }

  Rational operator()(const RationalMatrix& m) const {
    if (!fast_) return determinant(m);
    std::array<std::array<__int128, 5>, 5> a{};
    const long long l = scale_.convert_to<long long>();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const Rational& x = m(i + 1, j + 1);
        a[i][j] = static_cast<__int128>(boost::multiprecision::numerator(x).convert_to<long long>()) *
                  (l / boost::multiprecision::denominator(x).convert_to<long long>());
      }
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
      if (a[k][k] == 0) {
        int p = k + 1;
        while (p < n_ && a[p][k] == 0) ++p;
        if (p == n_) return 0;
        std::swap(a[p], a[k]);
        sign = -sign;
      }
      for (int i = k + 1; i < n_; ++i)
        for (int j = k + 1; j < n_; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    const __int128 d = sign * a[n_ - 1][n_ - 1];
    const bool negative = d < 0;
    const auto mag = static_cast<unsigned __int128>(negative ? -d : d);
    BigInt v = static_cast<std::uint64_t>(mag >> 64);
    v <<= 64;
    v += static_cast<std::uint64_t>(mag);
    if (negative) v = -v;
    return Rational(v, scale_pow_);
  }

 private:
  int n_;
  bool fast_ = false;
  BigInt scale_;
  BigInt scale_pow_;
};

// Calls f(matrix, det) for every matrix of the family with variable elements
// drawn from the discrete set, in mixed-radix order.
template <class F>
void for_each_discrete_matrix(const TypeSpec& spec, const ValueSet& xset, F&& f) {
  const auto& values = xset.values();
  const auto pos = variable_positions(spec);
  check_budget(values.size(), static_cast<int>(pos.size()));
  std::vector<Rational> entries = values;
  entries.emplace_back(1);
  const ScaledDeterminant det(entries, spec.n());
  RationalMatrix m = RationalMatrix::from_binary(spec.fixed_mask());
  std::vector<std::size_t> digit(pos.size(), 0);
  for (const auto& [i, j] : pos) m(i, j) = values[0];
  while (true) {
    f(m, det(m));
    std::size_t k = 0;
    while (k < pos.size()) {
      if (++digit[k] < values.size()) {
        m(pos[k].first, pos[k].second) = values[digit[k]];
        break;
      }
      digit[k] = 0;
      m(pos[k].first, pos[k].second) = values[0];
      ++k;
    }
    if (k == pos.size()) break;
  }
}

// Calls f(pattern) for every 0/1 assignment of the variable elements.
template <class F>
void for_each_pattern(const TypeSpec& spec, F&& f) {
  if (spec.n() > kMaxEnumerationDim) throw DimensionError("pattern scan supports n <= 5");
  check_budget(2, spec.m());
  const AssignmentLayout layout(spec);
  const std::uint64_t count = std::uint64_t{1} << spec.m();
  for (std::uint64_t a = 0; a < count; ++a) f(layout.matrix(a));
}

inline std::vector<BinaryMatrix> pertinent_patterns(const TypeSpec& spec) {
  std::vector<BinaryMatrix> out;
  for_each_pattern(spec, [&](const BinaryMatrix& b) {
    if (pertinent_rows(spec.family(), b.rows(), spec.n())) out.push_back(b);
  });
  return out;
}

}  // namespace detail

/// Ω: the least-modulus determinant and the matrices attaining it.
inline OmegaSet omega(const TypeSpec& spec, const ValueSet& xset) {
  OmegaSet o{spec, xset, Rational(spec.target())};
  if (!xset.is_discrete()) {
    // Every non-zero determinant value other than the forced one has
    // probability zero, so the attaining classes are the pertinent supports.
    o.representation = OmegaSet::Representation::patterns;
    o.patterns = detail::pertinent_patterns(spec);
    return o;
  }
  o.representation = OmegaSet::Representation::matrices;
  std::optional<Rational> best;
  detail::for_each_discrete_matrix(spec, xset, [&](const RationalMatrix& m, const Rational& d) {
    if (best && d == *best) {
      o.matrices.push_back(m);
    } else if (detail::better_u(d, best)) {
      best = d;
      o.matrices.assign(1, m);
    }
  });
  o.u = *best;
  return o;
}

/// u: the determinant value of least modulus attainable with positive
/// probability (positive sign preferred on a tie).
inline Rational compute_u(const TypeSpec& spec, const ValueSet& xset) {
  if (!xset.is_discrete()) {
    if (spec.n() > kMaxEnumerationDim) throw DimensionError("continuous case supports n <= 5");
    return spec.target();
  }
  std::optional<Rational> best;
  detail::for_each_discrete_matrix(spec, xset, [&](const RationalMatrix&, const Rational& d) {
    if (detail::better_u(d, best)) best = d;
  });
  return *best;
}

/// Ω~: binary matrices of the family attaining the least-modulus determinant
/// of the binarized matrix.
///
/// For a continuous set the binarized matrix of a least-change matrix is its
/// support class, so Ω~ is the set of pertinent patterns and u~ = u. For a
/// discrete set every support pattern occurs with positive probability (as
/// long as the set has a non-zero value), and u~ is the least-modulus
/// determinant over those patterns.
inline OmegaSet omega_tilde(const TypeSpec& spec, const ValueSet& xset) {
  OmegaSet o{spec, xset, Rational(spec.target()), true, OmegaSet::Representation::patterns};
  if (!xset.is_discrete()) {
    o.patterns = detail::pertinent_patterns(spec);
    return o;
  }
  std::optional<Rational> best;
  auto visit = [&](const BinaryMatrix& b) {
    const Rational d = determinant(RationalMatrix::from_binary(b));
    if (best && d == *best) {
      o.patterns.push_back(b);
    } else if (detail::better_u(d, best)) {
      best = d;
      o.patterns.assign(1, b);
    }
  };
  if (xset.has_nonzero()) {
    detail::for_each_pattern(spec, visit);
  } else {
    visit(spec.fixed_mask());
  }
  o.u = *best;
  return o;
}

inline Rational compute_u_tilde(const TypeSpec& spec, const ValueSet& xset) { return omega_tilde(spec, xset).u; }

/// Probability, as a polynomial in r, that a random matrix falls in Ω.
inline RationalPolynomial omega_probability(const OmegaSet& o) {
  const int m = o.spec.m();
  RationalPolynomial sum;
  if (o.representation == OmegaSet::Representation::patterns) {
    const RationalPolynomial r = RationalPolynomial::monomial(1, 1);
    const RationalPolynomial q(std::vector<Rational>{1, -1});
    for (std::size_t k = 0; k < o.size(); ++k) {
      const int i = o.nonzero_count(k);
      sum += r.pow(static_cast<unsigned>(i)) * q.pow(static_cast<unsigned>(m - i));
    }
    return sum;
  }
  const auto pos = detail::variable_positions(o.spec);
  for (const auto& mat : o.matrices) {
    RationalPolynomial p(Rational(1));
    for (const auto& [i, j] : pos) p *= o.xset.probability_of(mat(i, j));
    sum += p;
  }
  return sum;
}

struct InclusionReport {
  OmegaSet discrete_set;
  OmegaSet continuous_set;
  bool includes = false;                // Ω~(dis) contains Ω~(cnt)
  bool disjoint = false;
  std::vector<BinaryMatrix> only_discrete;    // Ω~(dis) \ Ω~(cnt)
  std::vector<BinaryMatrix> only_continuous;  // Ω~(cnt) \ Ω~(dis)
};

/// Compares Ω~ for a discrete set against Ω~ for a continuous set containing it.
/// For families A and B the inclusion always holds and a failure is a logic error.
inline InclusionReport check_inclusion(Family family, int n, const ValueSet& dis, const ValueSet& cnt) {
  if (!dis.is_discrete() || cnt.is_discrete()) {
    throw SpecViolation("inclusion check needs a discrete set and a continuous set");
  }
  for (const auto& x : dis.values()) {
    if (!cnt.contains(x)) throw SpecViolation("discrete value " + to_string(x) + " lies outside " + cnt.to_string());
  }
  const TypeSpec spec = TypeSpec::make(family, n);
  InclusionReport rep{omega_tilde(spec, dis), omega_tilde(spec, cnt)};
  const std::set<BinaryMatrix> d(rep.discrete_set.patterns.begin(), rep.discrete_set.patterns.end());
  const std::set<BinaryMatrix> c(rep.continuous_set.patterns.begin(), rep.continuous_set.patterns.end());
  std::set_difference(d.begin(), d.end(), c.begin(), c.end(), std::back_inserter(rep.only_discrete));
  std::set_difference(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(rep.only_continuous));
  rep.includes = rep.only_continuous.empty();
  rep.disjoint = rep.only_discrete.size() == d.size();
  if (family != Family::C && !rep.includes) {
    throw std::logic_error("binarized least-change set of a discrete subset lost a continuous member for " +
                           spec.name());
  }
  return rep;
}

struct BifurcationReport {
  RationalPolynomial continuous;  // P(det C_2 = 1), values in [0,1]
  RationalPolynomial discrete;    // P(det C_2 = 0), values in {0,1}
  RationalPolynomial sum;
  bool holds = false;
};

/// The C_2 pair [0,1] / {0,1}: the continuous event det = 1 and the discrete
/// event det = 0 have probabilities summing to exactly 1.
inline BifurcationReport bifurcation_check() {
  const TypeSpec c2 = TypeSpec::make(Family::C, 2);
  const OmegaSet cnt = omega(c2, ValueSet::interval(0, 1));
  const OmegaSet dis = omega(c2, ValueSet::discrete({0, 1}));
  BifurcationReport rep;
  rep.continuous = omega_probability(cnt);
  rep.discrete = omega_probability(dis);
  rep.sum = rep.continuous + rep.discrete;
  rep.holds = cnt.u == 1 && dis.u == 0 && rep.sum == RationalPolynomial(Rational(1));
  return rep;
}

/// Recomputes the counterexamples showing that, for discrete value sets, u
/// and u~ can differ, Ω_i and Ω~_i need not correspond, and det S = u does not
/// imply det S~ = u~.
inline std::vector<CheckRecord> prop6_witnesses() {
  std::vector<CheckRecord> out;
  auto rat = [](const Rational& x) { return to_string(x); };
  const Rational half(1, 2);

  // u(C_2) = 3/4 while u~(C~_2) = 0 for {0, 1/2}.
  {
    const ValueSet x = ValueSet::discrete({0, half});
    const TypeSpec c2 = TypeSpec::make(Family::C, 2);
    const RationalMatrix s2{{1, half}, {half, 1}};
    out.push_back(make_check("u(C_2, {0,1/2})", "3/4", rat(compute_u(c2, x))));
    out.push_back(make_check("det ((1,1/2),(1/2,1))", "3/4", rat(determinant(s2))));
    out.push_back(make_check("support ((1,1/2),(1/2,1))", "((1,1),(1,1))", support(s2).to_string()));
    out.push_back(make_check("u~(C~_2, {0,1/2})", "0", rat(compute_u_tilde(c2, x))));
  }

  // S_3 and T_3 share a support, both reach det 0.
  {
    const ValueSet x = ValueSet::discrete({0, half, 1, 2});
    const RationalMatrix s3{{1, 0, half}, {0, 1, 0}, {2, 1, 1}};
    const BinaryMatrix s3_tilde = BinaryMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {1, 1, 1}});
    const RationalMatrix t3 = RationalMatrix::from_binary(s3_tilde);
    out.push_back(make_check("support S_3 = S~_3", s3_tilde.to_string(), support(s3).to_string()));
    out.push_back(make_check("det S_3", "0", rat(determinant(s3))));
    out.push_back(make_check("det T_3", "0", rat(determinant(t3))));
    out.push_back(make_check("det S~_3", "0", rat(determinant(RationalMatrix::from_binary(s3_tilde)))));
    out.push_back(make_check("per S_3", "2", rat(permanent_expansion(s3))));
    out.push_back(make_check("per S~_3", "2", permanent_expansion(s3_tilde).str()));
    for (Family f : {Family::A, Family::B, Family::C}) {
      const TypeSpec spec = TypeSpec::make(f, 3);
      const OmegaSet om = omega(spec, x);
      const OmegaSet omt = omega_tilde(spec, x);
      const std::string name = std::string(1, to_char(f)) + "_3";
      out.push_back(make_check("u(" + name + ", {0,1/2,1,2})", "0", rat(om.u)));
      out.push_back(make_check("u~(" + name + "~, {0,1/2,1,2})", "0", rat(omt.u)));
      const int i = (support(s3) & spec.variable_mask()).count_ones();
      const auto sizes = om.partition_sizes();
      const auto sizes_tilde = omt.partition_sizes();
      const bool witnessed = om.contains(s3) && om.contains(t3) && omt.contains(s3_tilde);
      const bool differ = sizes[static_cast<std::size_t>(i)] != sizes_tilde[static_cast<std::size_t>(i)];
      out.push_back({"Omega_" + std::to_string(i) + "(" + name + ") vs Omega~_" + std::to_string(i) +
                         ": S_3, T_3 members with one shared support",
                     "no one-to-one correspondence",
                     "|Omega_i| = " + std::to_string(sizes[static_cast<std::size_t>(i)]) +
                         ", |Omega~_i| = " + std::to_string(sizes_tilde[static_cast<std::size_t>(i)]),
                     witnessed && differ});
    }
  }

  // det S_3 = 0 but det S~_3 = 1 for {0, 1, 2}.
  {
    const ValueSet x = ValueSet::discrete({0, 1, 2});
    const RationalMatrix mm{{1, 1, 0}, {1, 1, 0}, {0, 1, 1}};
    const RationalMatrix s3{{1, 0, 1}, {1, 1, 0}, {2, 1, 1}};
    const BinaryMatrix s3_tilde = BinaryMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    out.push_back(make_check("det M", "0", rat(determinant(mm))));
    out.push_back(make_check("support M = M", mm.to_string(), RationalMatrix::from_binary(support(mm)).to_string()));
    out.push_back(make_check("det S_3", "0", rat(determinant(s3))));
    out.push_back(make_check("support S_3", s3_tilde.to_string(), support(s3).to_string()));
    out.push_back(make_check("det S~_3", "1", rat(determinant(RationalMatrix::from_binary(s3_tilde)))));
    for (Family f : {Family::A, Family::B, Family::C}) {
      const TypeSpec spec = TypeSpec::make(f, 3);
      const std::string name = std::string(1, to_char(f)) + "_3";
      out.push_back(make_check("u(" + name + ", {0,1,2})", "0", rat(compute_u(spec, x))));
      out.push_back(make_check("u~(" + name + "~, {0,1,2})", "0", rat(compute_u_tilde(spec, x))));
    }
  }
  return out;
}

}  // namespace pertinent

#pragma once

#include <functional>
#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "pertinent/digraph.hpp"
#include "pertinent/discrete.hpp"
#include "pertinent/enumeration.hpp"
#include "pertinent/genfunc.hpp"
#include "pertinent/parallel.hpp"
#include "pertinent/permanent.hpp"
#include "pertinent/reference.hpp"
#include "pertinent/report.hpp"

namespace pertinent {

struct VerifyOptions {
  int n = 4;  // upper dimension for the exhaustive suites
  ParallelOptions parallel;
};

namespace detail {

template <class Seq>
std::string join(const Seq& seq) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : seq) {
    if (!first) s += ",";
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BigInt>) {
      s += x.str();
    } else {
      s += std::to_string(x);
    }
  }
  return s + "]";
}

inline std::string set_string(std::vector<BinaryMatrix> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

}  // namespace detail

// Enumerated tables against the published rows, n = 1..5.
inline std::vector<CheckRecord> verify_tables(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (Family f : {Family::A, Family::B, Family::C}) {
    for (int n = 1; n <= 5; ++n) {
      const auto t = count_pertinent(TypeSpec::make(f, n), opt.parallel);
      out.push_back(make_check(t.spec().name() + " enumeration", detail::join(*reference::table(f, n)),
                               detail::join(t.coeffs())));
    }
  }
  return out;
}

// Enumeration, DAG census and series routes agree for family C.
inline std::vector<CheckRecord> verify_routes(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (int n = 1; n <= 5; ++n) {
    const auto e = count_pertinent(TypeSpec::make(Family::C, n), opt.parallel);
    const auto d = count_dags_by_edges(n, opt.parallel);
    const auto g = count_dags_by_series(n);
    const std::string name = "C_" + std::to_string(n);
    out.push_back(make_check(name + " dag census = enumeration", detail::join(e.coeffs()), detail::join(d.coeffs())));
    out.push_back(make_check(name + " series = enumeration", detail::join(e.coeffs()), detail::join(g.coeffs())));
  }
  return out;
}

// per = 1 iff M - I is acyclic, for every family C matrix up to opt.n.
inline std::vector<CheckRecord> verify_prop3(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (int n = 1; n <= std::min(opt.n, kMaxEnumerationDim); ++n) {
    const TypeSpec spec = TypeSpec::make(Family::C, n);
    std::uint64_t checked = 0;
    std::uint64_t exceptions = 0;
    std::set<Digraph, bool (*)(const Digraph&, const Digraph&)> seen([](const Digraph& a, const Digraph& b) {
      return std::lexicographical_compare(a.out_neighbours().begin(), a.out_neighbours().end(),
                                          b.out_neighbours().begin(), b.out_neighbours().end());
    });
    detail::for_each_pattern(spec, [&](const BinaryMatrix& m) {
      ++checked;
      const Digraph g = matrix_to_digraph(m);
      seen.insert(g);
      if ((permanent_expansion(m) == 1) != is_acyclic(g)) ++exceptions;
    });
    out.push_back(make_check("C_" + std::to_string(n) + ": per = 1 <=> acyclic over " + std::to_string(checked) +
                                 " matrices",
                             "0 exceptions", std::to_string(exceptions) + " exceptions"));
    out.push_back(make_check("C_" + std::to_string(n) + ": matrix -> digraph injective", std::to_string(checked),
                             std::to_string(seen.size())));
  }
  return out;
}

// per = 0 iff no perfect matching, for every binary matrix up to opt.n.
inline std::vector<CheckRecord> verify_matching(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (int n = 1; n <= std::min(opt.n, 4); ++n) {
    std::uint64_t exceptions = 0;
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t a = 0; a < count; ++a) {
      std::vector<std::uint32_t> rows(n);
      for (int i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>((a >> (n * i)) & ((1u << n) - 1));
      const BinaryMatrix m(n, rows);
      if ((permanent_expansion(m) == 0) == has_perfect_matching(m.rows(), n)) ++exceptions;
    }
    out.push_back(make_check("n = " + std::to_string(n) + ": per = 0 <=> no perfect matching over " +
                                 std::to_string(count) + " matrices",
                             "0 exceptions", std::to_string(exceptions) + " exceptions"));
  }
  return out;
}

// Family A and C totals against the reference constants.
inline std::vector<CheckRecord> verify_sloane(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (int n = 1; n <= 5; ++n) {
    out.push_back(make_check("f_" + std::to_string(n), std::to_string(reference::kTotalsA[n - 1]),
                             total_pertinent(TypeSpec::make(Family::A, n), opt.parallel).str()));
  }
  for (int n = 1; n <= 5; ++n) {
    out.push_back(make_check("h_" + std::to_string(n), std::to_string(reference::kTotalsC[n - 1]),
                             count_dags_by_series(n).total().str()));
  }
  return out;
}

// j_min zero-valued variable elements are necessary and attained.
inline std::vector<CheckRecord> verify_extremes_suite(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  for (Family f : {Family::A, Family::B, Family::C}) {
    for (int n = 1; n <= std::min(opt.n, kMaxEnumerationDim); ++n) {
      const auto rep = verify_extremes(TypeSpec::make(f, n));
      out.push_back(make_check(rep.spec.name() + ": pertinent with fewer than j_min = " +
                                   std::to_string(rep.spec.j_min()) + " zeros",
                               "0", std::to_string(rep.pertinent_below_min)));
      const auto row = reference::table(f, n);
      const std::string expected = row ? std::to_string(row->back()) : "?";
      out.push_back(make_check(rep.spec.name() + ": witnesses with exactly j_min zeros", expected,
                               std::to_string(rep.witnesses.size())));
    }
  }
  return out;
}

// The C_2 and A_2 least-change sets for continuous and discrete value sets.
inline std::vector<CheckRecord> verify_omega(const VerifyOptions&) {
  std::vector<CheckRecord> out;
  const TypeSpec c2 = TypeSpec::make(Family::C, 2);
  const TypeSpec a2 = TypeSpec::make(Family::A, 2);
  const ValueSet cnt02 = ValueSet::interval(0, 2);
  const ValueSet dis = ValueSet::discrete({0, Rational(1, 2), 2});
  const auto I2 = BinaryMatrix::identity(2);
  const auto upper = BinaryMatrix::from_rows({{1, 1}, {0, 1}});
  const auto lower = BinaryMatrix::from_rows({{1, 0}, {1, 1}});
  const auto J2 = BinaryMatrix::ones(2);
  auto sizes = [](const OmegaSet& o) { return detail::join(o.partition_sizes()); };

  const OmegaSet o15 = omega(c2, cnt02);
  out.push_back(make_check("u(C_2,[0,2])", "1", to_string(o15.u)));
  out.push_back(make_check("Omega(C_2,[0,2]) classes", detail::set_string({I2, upper, lower}),
                           detail::set_string(o15.patterns)));
  out.push_back(make_check("|Omega_i(C_2,[0,2])|", "[1,2,0]", sizes(o15)));

  const OmegaSet o17 = omega(c2, dis);
  out.push_back(make_check("u(C_2,{0,1/2,2})", "0", to_string(o17.u)));
  std::vector<std::string> members;
  for (const auto& m : o17.matrices) members.push_back(m.to_string());
  std::sort(members.begin(), members.end());
  std::string got;
  for (const auto& s : members) got += s + ";";
  out.push_back(make_check("Omega(C_2,{0,1/2,2})", "((1,1/2),(2,1));((1,2),(1/2,1));", got));
  out.push_back(make_check("|Omega_i(C_2,{0,1/2,2})|", "[0,0,2]", sizes(o17)));
  out.push_back(make_check("P(Omega(C_2,{0,1/2,2}))", "1/2*r^2", omega_probability(o17).to_string("r")));

  const OmegaSet o18 = omega_tilde(c2, cnt02);
  out.push_back(make_check("Omega~(C~_2,[0,2])", detail::set_string({I2, upper, lower}), detail::set_string(o18.patterns)));
  out.push_back(make_check("|Omega~_i(C~_2,[0,2])|", "[1,2,0]", sizes(o18)));
  const OmegaSet o19 = omega_tilde(c2, dis);
  out.push_back(make_check("Omega~(C~_2,{0,1/2,2})", detail::set_string({J2}), detail::set_string(o19.patterns)));
  out.push_back(make_check("|Omega~_i(C~_2,{0,1/2,2})|", "[0,0,1]", sizes(o19)));

  const OmegaSet o28 = omega(c2, ValueSet::discrete({0, 1}));
  const OmegaSet o28t = omega_tilde(c2, ValueSet::discrete({0, 1}));
  out.push_back(make_check("u(C_2,[0,1])", "1", to_string(compute_u(c2, ValueSet::interval(0, 1)))));
  out.push_back(make_check("u(C_2,{0,1})", "0", to_string(o28.u)));
  out.push_back(make_check("Omega(C_2,{0,1})", "((1,1),(1,1));", o28.matrices.size() == 1 ? o28.matrices[0].to_string() + ";" : "?"));
  out.push_back(make_check("Omega~(C~_2,{0,1})", detail::set_string({J2}), detail::set_string(o28t.patterns)));
  return out;
}

// Binarized sets for a discrete subset contain those of the continuous set for A and B, not for C.
inline std::vector<CheckRecord> verify_inclusion(const VerifyOptions&) {
  std::vector<CheckRecord> out;
  const ValueSet cnt02 = ValueSet::interval(0, 2);
  const ValueSet dis = ValueSet::discrete({0, Rational(1, 2), 2});
  const auto J2 = BinaryMatrix::ones(2);
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };

  const std::vector<BinaryMatrix> cnt_a2 = {
      BinaryMatrix::from_rows({{0, 0}, {0, 0}}), BinaryMatrix::from_rows({{1, 0}, {0, 0}}),
      BinaryMatrix::from_rows({{0, 1}, {0, 0}}), BinaryMatrix::from_rows({{0, 0}, {1, 0}}),
      BinaryMatrix::from_rows({{0, 0}, {0, 1}}), BinaryMatrix::from_rows({{1, 1}, {0, 0}}),
      BinaryMatrix::from_rows({{0, 0}, {1, 1}}), BinaryMatrix::from_rows({{1, 0}, {1, 0}}),
      BinaryMatrix::from_rows({{0, 1}, {0, 1}})};
  auto dis_a2 = cnt_a2;
  dis_a2.push_back(J2);
  const auto inc_a = check_inclusion(Family::A, 2, dis, cnt02);
  out.push_back(make_check("u~(A~_2,[0,2])", "0", to_string(inc_a.continuous_set.u)));
  out.push_back(make_check("u~(A~_2,{0,1/2,2})", "0", to_string(inc_a.discrete_set.u)));
  out.push_back(make_check("Omega~(A~_2,[0,2])", detail::set_string(cnt_a2), detail::set_string(inc_a.continuous_set.patterns)));
  out.push_back(make_check("Omega~(A~_2,{0,1/2,2})", detail::set_string(dis_a2), detail::set_string(inc_a.discrete_set.patterns)));
  out.push_back(make_check("A~_2: discrete set contains continuous set", "true", yes(inc_a.includes)));
  out.push_back(make_check("A~_2: discrete minus continuous", detail::set_string({J2}), detail::set_string(inc_a.only_discrete)));

  for (int n = 2; n <= 3; ++n) {
    for (Family f : {Family::A, Family::B}) {
      const auto inc = check_inclusion(f, n, dis, cnt02);
      out.push_back(make_check(TypeSpec::make(f, n).name() + "~: discrete set contains continuous set", "true",
                               yes(inc.includes)));
    }
  }

  const auto inc_c = check_inclusion(Family::C, 2, dis, cnt02);
  out.push_back(make_check("C~_2 with {0,1/2,2} and [0,2]: discrete set contains continuous set", "false",
                           yes(inc_c.includes)));
  const auto inc_c01 = check_inclusion(Family::C, 2, ValueSet::discrete({0, 1}), ValueSet::interval(0, 1));
  out.push_back(make_check("C~_2 with {0,1} and [0,1]: sets disjoint", "true", yes(inc_c01.disjoint)));
  return out;
}

inline std::vector<CheckRecord> verify_bifurcation(const VerifyOptions&) {
  const auto rep = bifurcation_check();
  return {make_check("P_cnt(det C_2 = 1)", "1 - r^2", rep.continuous.to_string("r")),
          make_check("P_dis(det C_2 = 0)", "r^2", rep.discrete.to_string("r")),
          make_check("P_cnt + P_dis", "1", rep.sum.to_string("r"))};
}

inline std::vector<CheckRecord> verify_prop6(const VerifyOptions&) { return prop6_witnesses(); }

using Suite = std::function<std::vector<CheckRecord>(const VerifyOptions&)>;

/// Named suites; "all" runs every other suite in this order.
inline const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"tables", verify_tables},       {"routes", verify_routes}, {"prop3", verify_prop3},
      {"matching", verify_matching},   {"sloane", verify_sloane}, {"extremes", verify_extremes_suite},
      {"omega", verify_omega},         {"prop6", verify_prop6},   {"prop7", verify_inclusion},
      {"bifurcation", verify_bifurcation},
  };
  return s;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

inline std::vector<CheckRecord> run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  std::vector<CheckRecord> out;
  for (const auto& [key, fn] : suites()) {
    if (name == "all" || name == key) {
      auto part = fn(opt);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      if (name != "all") return out;
    }
  }
  if (name != "all") throw SpecViolation("unknown suite '" + name + "'");
  return out;
}

}  // namespace pertinent

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "pertinent/discrete.hpp"

using namespace pertinent;

namespace {

const Rational kHalf(1, 2);

std::set<BinaryMatrix> as_set(const std::vector<BinaryMatrix>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ValueSet, Parse) {
  const auto v = ValueSet::parse("0,1/2@1/2,2@1/2");
  EXPECT_TRUE(v.is_discrete());
  EXPECT_EQ(v.values().size(), 3u);
  EXPECT_EQ(v.probability_of(Rational(2)).to_string("r"), "1/2*r");
  EXPECT_EQ(v.probability_of(Rational(0)).to_string("r"), "1 - r");
  const auto w = ValueSet::parse("{1/2, 2}");
  EXPECT_TRUE(w.contains(0));
  EXPECT_EQ(w.probability_of(kHalf), v.probability_of(kHalf));
  const auto c = ValueSet::parse("[0,2]");
  EXPECT_FALSE(c.is_discrete());
  EXPECT_TRUE(c.contains(Rational(3, 2)));
  EXPECT_FALSE(c.contains(3));
  EXPECT_EQ(ValueSet::parse("0,0.25").values().back(), Rational(1, 4));
  EXPECT_THROW(ValueSet::parse("0,1@1/3,2@1/3"), SpecViolation);
  EXPECT_THROW(ValueSet::parse("0,x"), ParseError);
  EXPECT_THROW(ValueSet::parse("[1,2]"), SpecViolation);
}

TEST(ComputeU, ClosedForms) {
  const auto c2 = TypeSpec::make(Family::C, 2);
  EXPECT_EQ(compute_u(c2, ValueSet::discrete({0, kHalf, 2})), 0);
  EXPECT_EQ(compute_u(c2, ValueSet::discrete({0, kHalf})), Rational(3, 4));
  EXPECT_EQ(compute_u(c2, ValueSet::interval(0, 2)), 1);
  EXPECT_EQ(compute_u(TypeSpec::make(Family::A, 3), ValueSet::interval(0, 1)), 0);
  EXPECT_EQ(compute_u(TypeSpec::make(Family::B, 2), ValueSet::discrete({0, 3})), 0);
  // Only -1 and +1 reachable at modulus 1: the positive one is reported.
  EXPECT_EQ(compute_u(TypeSpec::make(Family::C, 2), ValueSet::discrete({0, 2})), 1);
}

TEST(ComputeU, Budget) {
  const auto a5 = TypeSpec::make(Family::A, 5);
  EXPECT_THROW(compute_u(a5, ValueSet::discrete({0, 1, 2})), BudgetExceeded);
}

TEST(Omega, DiscreteMembersAttainU) {
  for (Family f : {Family::A, Family::B, Family::C}) {
    const auto spec = TypeSpec::make(f, 2);
    const auto x = ValueSet::discrete({0, kHalf, 1, 2});
    const auto o = omega(spec, x);
    ASSERT_GT(o.size(), 0u);
    for (const auto& m : o.matrices) EXPECT_EQ(determinant(m), o.u);
    const auto sizes = o.partition_sizes();
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    EXPECT_EQ(total, o.size());
    for (std::size_t k = 0; k < o.size(); ++k) {
      EXPECT_EQ((support(o.matrices[k]) & spec.variable_mask()).count_ones(), o.nonzero_count(k));
    }
  }
}

TEST(Omega, MinimalityByDirectScan) {
  const auto spec = TypeSpec::make(Family::C, 3);
  const auto x = ValueSet::discrete({0, kHalf, 2});
  const Rational u = compute_u(spec, x);
  Rational best = -1;
  detail::for_each_discrete_matrix(spec, x, [&](const RationalMatrix& m, const Rational&) {
    const Rational d = abs(determinant_expansion(m));
    if (best < 0 || d < best) best = d;
  });
  EXPECT_EQ(abs(u), best);
}

TEST(Omega, CTwoInstances) {
  const auto c2 = TypeSpec::make(Family::C, 2);
  const auto dis = omega(c2, ValueSet::discrete({0, kHalf, 2}));
  ASSERT_EQ(dis.matrices.size(), 2u);
  EXPECT_TRUE(dis.contains(RationalMatrix{{1, 2}, {kHalf, 1}}));
  EXPECT_TRUE(dis.contains(RationalMatrix{{1, kHalf}, {2, 1}}));
  EXPECT_EQ(dis.partition_sizes(), (std::vector<std::size_t>{0, 0, 2}));
  EXPECT_EQ(omega_probability(dis).to_string("r"), "1/2*r^2");

  const auto cnt = omega(c2, ValueSet::interval(0, 2));
  EXPECT_EQ(as_set(cnt.patterns), (std::set<BinaryMatrix>{BinaryMatrix::identity(2),
                                                         BinaryMatrix::from_rows({{1, 1}, {0, 1}}),
                                                         BinaryMatrix::from_rows({{1, 0}, {1, 1}})}));
  EXPECT_EQ(cnt.partition_sizes(), (std::vector<std::size_t>{1, 2, 0}));

  EXPECT_EQ(as_set(omega_tilde(c2, ValueSet::discrete({0, kHalf, 2})).patterns),
            (std::set<BinaryMatrix>{BinaryMatrix::ones(2)}));
  EXPECT_EQ(omega_tilde(c2, ValueSet::interval(0, 2)).size(), 3u);
}

TEST(Omega, FamiliesAAndBWitnessedByAZeroLine) {
  RationalMatrix zero_row_a(3);
  zero_row_a(2, 1) = 2;
  zero_row_a(2, 2) = 2;
  zero_row_a(3, 3) = 2;
  RationalMatrix zero_col_b = RationalMatrix::identity(3);
  zero_col_b(1, 1) = 0;
  zero_col_b(1, 3) = 2;
  for (const auto& x : {ValueSet::discrete({0, kHalf, 2}), ValueSet::discrete({0, 1, 2})}) {
    const auto a = omega(TypeSpec::make(Family::A, 3), x);
    const auto b = omega(TypeSpec::make(Family::B, 3), x);
    EXPECT_EQ(a.u, 0);
    EXPECT_EQ(b.u, 0);
    EXPECT_EQ(compute_u_tilde(TypeSpec::make(Family::A, 3), x), 0);
    EXPECT_EQ(compute_u_tilde(TypeSpec::make(Family::B, 3), x), 0);
    EXPECT_TRUE(a.contains(zero_row_a)) << x.to_string();
    EXPECT_TRUE(b.contains(zero_col_b)) << x.to_string();
  }
}

TEST(Inclusion, Reports) {
  const auto dis = ValueSet::discrete({0, kHalf, 2});
  const auto cnt = ValueSet::interval(0, 2);
  const auto a = check_inclusion(Family::A, 2, dis, cnt);
  EXPECT_TRUE(a.includes);
  EXPECT_EQ(a.continuous_set.size(), 9u);
  EXPECT_EQ(a.only_discrete, std::vector<BinaryMatrix>{BinaryMatrix::ones(2)});
  EXPECT_TRUE(check_inclusion(Family::B, 3, dis, cnt).includes);
  EXPECT_FALSE(check_inclusion(Family::C, 2, dis, cnt).includes);
  EXPECT_TRUE(check_inclusion(Family::C, 2, ValueSet::discrete({0, 1}), ValueSet::interval(0, 1)).disjoint);
  EXPECT_THROW(check_inclusion(Family::A, 2, ValueSet::discrete({0, 3}), cnt), SpecViolation);
}

TEST(Bifurcation, ExactIdentity) {
  const auto rep = bifurcation_check();
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.continuous.to_string("r"), "1 - r^2");
  EXPECT_EQ(rep.discrete.to_string("r"), "r^2");
  EXPECT_EQ(rep.sum, RationalPolynomial(Rational(1)));
}

TEST(Prop6, AllWitnessChecksPass) {
  for (const auto& c : prop6_witnesses()) EXPECT_TRUE(c.pass) << c.instance << ": " << c.claimed << " vs " << c.computed;
}

TEST(ScaledDeterminant, AgreesWithElimination) {
  std::mt19937_64 rng(3);
  const std::vector<Rational> values = {0, kHalf, 2, Rational(1, 3), Rational(-3, 4)};
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (int n = 1; n <= 5; ++n) {
    auto entries = values;
    entries.emplace_back(1);
    const detail::ScaledDeterminant det(entries, n);
    for (int trial = 0; trial < 300; ++trial) {
      RationalMatrix m(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = i == j ? Rational(1) : values[pick(rng)];
      ASSERT_EQ(det(m), determinant(m)) << m.to_string();
    }
  }
}

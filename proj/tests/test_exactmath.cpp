#include "starpi/exactmath/groebner.hpp"
#include "starpi/exactmath/linalg.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace starpi;

namespace {

Poly x(std::uint32_t r, std::uint32_t c = 1, std::uint32_t s = 1) { return Poly::variable({r, c, s}); }

// Determinant by permutation expansion, exact.
Scalar det_oracle(const ScalarRows& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar d = 0;
  do {
    Scalar t = 1;
    for (std::size_t i = 0; i < n; ++i) t *= a[i][p[i]];
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    d += inv % 2 ? -t : t;
  } while (std::next_permutation(p.begin(), p.end()));
  return d;
}

// Rank as the largest nonvanishing square minor.
std::size_t rank_oracle(const ScalarRows& a) {
  const std::size_t h = a.size(), w = a.empty() ? 0 : a[0].size();
  for (std::size_t k = std::min(h, w); k > 0; --k) {
    std::vector<bool> rs(h, false), cs(w, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        ScalarRows m;
        for (std::size_t i = 0; i < h; ++i) {
          if (!rs[i]) continue;
          ScalarVector row;
          for (std::size_t j = 0; j < w; ++j)
            if (cs[j]) row.push_back(a[i][j]);
          m.push_back(row);
        }
        if (!is_zero(det_oracle(m))) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

} // namespace

TEST(Scalar, ParseCanonical) {
  EXPECT_EQ(parse_scalar("+4/6"), make_scalar(2, 3));
  EXPECT_EQ(parse_scalar("-3/2").get_str(), "-3/2");
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
}

TEST(Scalar, RandomIsDeterministicAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = random_scalar(a, 5);
    EXPECT_EQ(s, random_scalar(b, 5));
    EXPECT_LE(abs(s.get_num()), 5);
    EXPECT_LE(s.get_den(), 5);
  }
}

TEST(Poly, ArithmeticIsCanonical) {
  const Poly p = x(1) * x(2) + x(1);
  EXPECT_EQ(p - p, Poly());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x(1) + x(2)) * (x(1) - x(2)), x(1) * x(1) - x(2) * x(2));
  EXPECT_EQ(Poly(make_scalar(1, 2)) * Poly(2), Poly(1));
}

TEST(Poly, EvalAndSpecialize) {
  const Poly p = x(1) * x(1) * x(2) - Poly(3) * x(2);
  std::map<ParamId, Scalar> at{{{1, 1, 1}, 2}, {{2, 1, 1}, make_scalar(1, 2)}};
  EXPECT_EQ(p.eval(at), make_scalar(1, 2));
  EXPECT_EQ(p.specialize({{{1, 1, 1}, 2}}), x(2));
  EXPECT_THROW(p.eval(std::map<ParamId, Scalar>{{{1, 1, 1}, 2}}), MissingAssignment);
}

TEST(Poly, GrevlexLeadingTerm) {
  // Smallest ParamId is the largest variable; degree dominates.
  const Poly p = x(1) + x(2) * x(2);
  EXPECT_EQ(Poly(p.leading_monomial(), 1), x(2) * x(2));
  const Poly q = x(2) * x(3) + x(1) * x(3);
  EXPECT_EQ(Poly(q.leading_monomial(), 1), x(1) * x(3));
}

TEST(Linalg, RankMatchesMinorOracle) {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t h = 1 + uniform_int(rng, 0, 3), w = 1 + uniform_int(rng, 0, 3);
    ScalarRows a(h, ScalarVector(w));
    for (auto& r : a)
      for (auto& e : r) e = uniform_int(rng, 0, 2) == 0 ? Scalar(0) : random_scalar(rng, 3);
    // Force some dependent rows.
    if (h > 2 && t % 3 == 0)
      for (std::size_t j = 0; j < w; ++j) a[2][j] = a[0][j] * 2 - a[1][j];
    EXPECT_EQ(matrix_rank(a), rank_oracle(a)) << "trial " << t;
  }
}

TEST(Linalg, SolveProducesExactSolution) {
  const ScalarRows a{{1, 2, 3}, {2, 4, 7}};
  const ScalarVector b{1, make_scalar(5, 2)};
  const auto sol = linear_solve(a, b);
  ASSERT_TRUE(sol);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += a[i][j] * (*sol)[j];
    EXPECT_EQ(s, b[i]);
  }
  EXPECT_FALSE(linear_solve({{1, 1}, {2, 2}}, {1, 3}));
}

TEST(Linalg, EmptyAndZero) {
  EXPECT_EQ(matrix_rank({}), 0u);
  EXPECT_EQ(matrix_rank({{0, 0}, {0, 0}}), 0u);
  EXPECT_THROW(matrix_rank({{1, 2}, {1}}), ShapeError);
}

TEST(Groebner, InfeasibleSystemHasCofactors) {
  // a1 b2 = 1, a2 b1 = 1, a1 a2 = 0.
  const Poly a1 = x(1), a2 = x(2), b1 = x(3), b2 = x(4);
  const std::vector<Poly> gens{a1 * b2 - Poly(1), a2 * b1 - Poly(1), a1 * a2};
  const auto r = groebner_basis(gens);
  ASSERT_TRUE(r.complete());
  EXPECT_TRUE(ideal_contains_one(r.basis));
  Poly combo;
  for (std::size_t j = 0; j < gens.size(); ++j) combo += r.cofactors[0][j] * gens[j];
  EXPECT_EQ(combo, Poly(1));
}

TEST(Groebner, ConsistentSystemReducesMembers) {
  const std::vector<Poly> gens{x(1) * x(1) - x(2), x(1) * x(2) - Poly(1)};
  const auto r = groebner_basis(gens);
  ASSERT_TRUE(r.complete());
  EXPECT_FALSE(ideal_contains_one(r.basis));
  // Every ideal member reduces to zero; the basis is monic.
  const Poly member = x(3) * gens[0] + (x(1) + Poly(5)) * gens[1];
  EXPECT_TRUE(normal_form(member, r.basis.generators).is_zero());
  for (const auto& g : r.basis.generators) EXPECT_EQ(g.leading_coefficient(), Scalar(1));
  // Cofactor rows reproduce each generator.
  for (std::size_t i = 0; i < r.basis.generators.size(); ++i) {
    Poly combo;
    for (std::size_t j = 0; j < gens.size(); ++j) combo += r.cofactors[i][j] * gens[j];
    EXPECT_EQ(combo, r.basis.generators[i]);
  }
}

TEST(Groebner, LimitsYieldIncomplete) {
  std::vector<Poly> gens;
  for (std::uint32_t i = 1; i <= 4; ++i) gens.push_back(x(i) * x(i + 1) - x(i + 2) * x(i + 2) + Poly(i));
  BuchbergerLimits tiny;
  tiny.max_pairs = 1;
  const auto r = groebner_basis(gens, tiny);
  EXPECT_FALSE(r.complete());
  EXPECT_FALSE(r.reason.empty());
}

TEST(Groebner, EmptyAndConstantInputs) {
  EXPECT_THROW(groebner_basis({}), Error);
  EXPECT_TRUE(groebner_basis({Poly()}).basis.generators.empty());
  EXPECT_TRUE(ideal_contains_one(groebner_basis({Poly(3)}).basis));
}

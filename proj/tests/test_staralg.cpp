#include "star_properties.hpp"
#include "starpi/exactmath/linalg.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace starpi;

namespace {

RatMatrix m(std::string_view text, std::uint32_t n) { return parse_rat_matrix(text, n); }

std::vector<std::string> basis_text(const StarAlgebraSpec& spec, std::uint8_t parity, Symmetry s) {
  std::vector<std::string> out;
  for (const auto& b : spec.component({parity, s})) out.push_back(to_string(b.matrix(spec.n())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST(UpperMatrix, ProductAndText) {
  const RatMatrix a = m("e11 + e44", 4), b = m("e13 + e24", 4);
  EXPECT_EQ(to_string(a * b), "e13");
  EXPECT_EQ(to_string(b * a), "e24");
  EXPECT_EQ(to_string(m("-3/2e12 + e23 - e33", 3)), "-3/2e12 + e23 - e33");
  EXPECT_EQ(to_string(RatMatrix(3)), "0");
  EXPECT_THROW(m("e41", 4), Error);
  EXPECT_THROW(m("e12 e23", 3), Error);
}

TEST(Grading, DegreeOfUnits) {
  const auto g = GradingSeq::parse("0101");
  EXPECT_EQ(g.degree({1, 1}), 0);
  EXPECT_EQ(g.degree({1, 2}), 1);
  EXPECT_EQ(g.degree({1, 3}), 0);
  EXPECT_EQ(g.degree({2, 3}), 1);
  EXPECT_THROW(GradingSeq::parse("01a"), SpecError);
}

TEST(Grading, StarTypeCondition) {
  for (const auto* s : {"0101", "010", "000", "0110", "1001", "01010"}) EXPECT_TRUE(GradingSeq::parse(s).is_star_type()) << s;
  for (const auto* s : {"001", "0100", "0010"}) EXPECT_FALSE(GradingSeq::parse(s).is_star_type()) << s;
  EXPECT_THROW(build_algebra(3, "001", "super-reflection"), SpecError);
}

TEST(Algebra, Ut4SuperSymplecticComponents) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  EXPECT_EQ(spec.component_dims(), (std::array<std::size_t, 4>{3, 3, 2, 2}));
  EXPECT_EQ(basis_text(spec, 0, Symmetry::plus), sorted({"e11 + e44", "e22 + e33", "e13 + e24"}));
  EXPECT_EQ(basis_text(spec, 0, Symmetry::minus), sorted({"e11 - e44", "e22 - e33", "e13 - e24"}));
  EXPECT_EQ(basis_text(spec, 1, Symmetry::plus), sorted({"e14", "e12 + e34"}));
  EXPECT_EQ(basis_text(spec, 1, Symmetry::minus), sorted({"e23", "e12 - e34"}));
}

TEST(Algebra, Ut3SuperReflectionComponents) {
  const auto spec = build_algebra(3, "010", "super-reflection");
  EXPECT_EQ(spec.component_dims(), (std::array<std::size_t, 4>{2, 2, 1, 1}));
  EXPECT_EQ(basis_text(spec, 1, Symmetry::plus), std::vector<std::string>{"e12 + e23"});
  EXPECT_EQ(basis_text(spec, 1, Symmetry::minus), std::vector<std::string>{"e12 - e23"});
}

TEST(Algebra, StarOfUnits) {
  const auto ut4 = build_algebra(4, "0101", "super-symplectic");
  EXPECT_EQ(apply_star(ut4, m("e11", 4)), m("e44", 4));
  EXPECT_EQ(apply_star(ut4, m("e23", 4)), m("-e23", 4));
  const auto ut3 = build_algebra(3, "010", "super-reflection");
  EXPECT_EQ(apply_star(ut3, m("e13", 3)), m("-e13", 3));
}

TEST(Algebra, SymplecticNeedsEvenSize) {
  EXPECT_THROW(build_algebra(3, "000", "symplectic"), SpecError);
  EXPECT_THROW(build_algebra(3, "010", "super-symplectic"), SpecError);
  EXPECT_THROW(build_algebra(3, "010", "transpose"), SpecError);
  EXPECT_THROW(build_algebra(4, "010", "reflection"), SpecError);
}

TEST(Algebra, ComponentsPartitionTheAlgebra) {
  for (const auto& [n, g, k] : std::vector<std::tuple<std::uint32_t, std::string, std::string>>{
           {4, "0101", "super-symplectic"}, {4, "0101", "super-reflection"}, {3, "010", "super-reflection"},
           {3, "000", "reflection"}, {4, "0000", "symplectic"}, {5, "01010", "super-reflection"},
           {6, "010101", "super-symplectic"}, {4, "0110", "reflection"}}) {
    const auto spec = build_algebra(n, g, k);
    ScalarRows rows;
    std::size_t total = 0;
    for (std::uint8_t parity : {0, 1})
      for (auto s : {Symmetry::plus, Symmetry::minus}) {
        const ComponentTag tag{parity, s};
        for (const auto& b : spec.component(tag)) {
          const RatMatrix bm = b.matrix(n);
          rows.push_back(bm.packed());
          RatMatrix signed_bm = bm;
          if (s == Symmetry::minus) signed_bm.scale(Scalar(-1));
          EXPECT_EQ(apply_star(spec, bm), signed_bm) << spec.id() << " " << to_string(bm);
          EXPECT_EQ(homogeneous_degree(spec, bm), parity) << spec.id() << " " << to_string(bm);
          ++total;
        }
      }
    EXPECT_EQ(total, n * (n + 1) / 2) << spec.id();
    EXPECT_EQ(matrix_rank(rows), total) << spec.id();
  }
}

TEST(Algebra, PhiSignFollowsOddChains) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  EXPECT_EQ(spec.phi_sign({1, 2}), 1);
  EXPECT_EQ(spec.phi_sign({1, 3}), -1);
  EXPECT_EQ(spec.phi_sign({1, 4}), -1);
  EXPECT_EQ(spec.phi_sign({1, 1}), 1);
}

TEST(Elements, GenericElementShape) {
  const auto spec = build_algebra(3, "010", "super-reflection");
  const PolyMatrix g = generic_element(spec, {0, Symmetry::minus}, 1);
  const Poly a = Poly::variable({1, 1, 1}), c = Poly::variable({1, 3, 1});
  EXPECT_EQ(g.at({1, 1}), a);
  EXPECT_EQ(g.at({3, 3}), -a);
  EXPECT_EQ(g.at({1, 3}), c);
  EXPECT_TRUE(g.at({2, 2}).is_zero());
  const auto ut4 = build_algebra(4, "0101", "super-symplectic");
  const PolyMatrix h = generic_element(ut4, {1, Symmetry::minus}, 2);
  for (const auto& p : ut_positions(4)) {
    if (!h.at(p).is_zero()) {
      EXPECT_TRUE((p == Position{2, 3} || p == Position{1, 2} || p == Position{3, 4}));
    }
  }
  EXPECT_EQ(h.at({1, 2}), -h.at({3, 4}));
}

TEST(Elements, EmptyComponentIsAnError) {
  const auto spec = build_algebra(1, "0", "reflection");
  EXPECT_THROW(generic_element(spec, {1, Symmetry::plus}, 1), SpecError);
  EXPECT_THROW(random_element(spec, {1, Symmetry::minus}, 1, 3), SpecError);
}

TEST(Elements, RandomElementIsDeterministicAndInComponent) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  const ComponentTag tag{0, Symmetry::plus};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const RatMatrix a = random_element(spec, tag, seed, 3);
    EXPECT_EQ(a, random_element(spec, tag, seed, 3));
    EXPECT_TRUE(component_coordinates(spec, tag, a).has_value());
    const RatMatrix unit_bound = random_element(spec, tag, seed, 1);
    for (const auto& e : unit_bound.packed()) EXPECT_TRUE(e == 0 || e == 1 || e == -1);
  }
}

class StarProperties : public ::testing::TestWithParam<std::tuple<std::uint32_t, const char*, const char*>> {};

TEST_P(StarProperties, HoldOnRandomHomogeneousPairs) {
  const auto [n, g, k] = GetParam();
  const auto spec = build_algebra(n, g, k);
  const auto t = proptest::check_star_properties(spec, 1000, 99);
  EXPECT_TRUE(t.all_passed()) << spec.id() << ": " << t.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Algebras, StarProperties,
                         ::testing::Values(std::make_tuple(4u, "0101", "super-symplectic"),
                                           std::make_tuple(4u, "0101", "super-reflection"),
                                           std::make_tuple(3u, "010", "super-reflection"),
                                           std::make_tuple(3u, "000", "reflection"),
                                           std::make_tuple(4u, "0000", "symplectic"),
                                           std::make_tuple(5u, "01010", "super-reflection"),
                                           std::make_tuple(6u, "010101", "super-symplectic")),
                         [](const auto& info) {
                           std::string s = "UT" + std::to_string(std::get<0>(info.param)) + "_" +
                                           std::get<1>(info.param) + "_" + std::get<2>(info.param);
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

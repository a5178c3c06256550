#include "starpi/freestar/parser.hpp"
#include "starpi/freestar/substitute.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace starpi;

namespace {

StarPoly P(std::string_view s) { return parse_star_poly(s); }
StarPoly L(const VarSymbol& v) { return letter(v); }

} // namespace

TEST(Parser, CommutatorOfTwo) {
  EXPECT_EQ(P("[y1-,y2-]"), L(ym(1)) * L(ym(2)) - L(ym(2)) * L(ym(1)));
}

TEST(Parser, LeftNormedCommutator) {
  const StarPoly a = L(yp(1)), b = L(yp(2)), c = L(yp(3));
  const StarPoly f = P("[y1+,y2+,y3+]");
  EXPECT_EQ(f, commutator(commutator(a, b), c));
  EXPECT_EQ(f.size(), 4u);
  for (const auto& [w, coeff] : f.terms()) EXPECT_TRUE(coeff == 1 || coeff == -1);
}

TEST(Parser, RationalCoefficients) {
  const StarPoly f = P("2/3 y1+ z1- - z1- y1+");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms().at(Word{yp(1), zm(1)}), make_scalar(2, 3));
  EXPECT_EQ(f.terms().at(Word{zm(1), yp(1)}), Scalar(-1));
}

TEST(Parser, SuffixSignVersusDifference) {
  EXPECT_EQ(P("y1+ - y2+"), L(yp(1)) - L(yp(2)));
  EXPECT_EQ(P("y1- -y2+"), L(ym(1)) - L(yp(2)));
}

TEST(Parser, RoundTripThroughText) {
  for (const auto* s : {"2/3 y1+ z1- - z1- y1+", "[y1+,y2+,y3+]", "y1- y2- - 4 y2- y1-", "z1+ y1+ z2+", "0",
                        "-1/2 [z1-,z2+] y3+"}) {
    const StarPoly f = P(s);
    EXPECT_EQ(P(to_string(f)), f) << s;
  }
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    P("y1+ + ]");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 6u);
  }
  EXPECT_THROW(P("w1+"), ParseError);
  EXPECT_THROW(P("[y1+]"), ParseError);
  EXPECT_THROW(P("y0+"), ParseError);
  EXPECT_THROW(P("2/0 y1+"), Error);
}

TEST(Parser, UnsignedOnlyInSchemaMode) {
  EXPECT_THROW(P("z1 y1+"), Error);
  const auto variants = parse_star_poly_schema("z1 y1+ z2");
  EXPECT_EQ(variants.size(), 4u);
  std::set<std::string> texts;
  for (const auto& v : variants) texts.insert(to_string(v));
  EXPECT_EQ(texts.size(), 4u);
  EXPECT_EQ(parse_star_poly_schema("y1 y2").size(), 4u);
}

TEST(Words, EnumerationCounts) {
  const auto w2 = enumerate_words({{2, 0, 0, 0}});
  EXPECT_EQ(w2, (std::vector<Word>{{yp(1), yp(2)}, {yp(2), yp(1)}}));
  EXPECT_EQ(enumerate_words({{0, 0, 0, 3}}).size(), 6u);
  for (const auto& w : enumerate_words({{0, 0, 0, 3}}))
    for (const auto& v : w) EXPECT_EQ(v.component(), (ComponentTag{1, Symmetry::minus}));
  EXPECT_EQ(enumerate_words({{1, 1, 0, 0}}), (std::vector<Word>{{yp(1), zp(2)}, {zp(2), yp(1)}}));
  EXPECT_THROW(enumerate_words({{0, 0, 0, 0}}), Error);
}

TEST(Words, EnumerationIsDistinctAndMultilinear) {
  for (const auto& sig : signatures_of_degree(4)) {
    const auto words = enumerate_words(sig);
    EXPECT_EQ(words.size(), 24u);
    EXPECT_EQ(std::set<Word>(words.begin(), words.end()).size(), 24u);
    for (const auto& w : words) EXPECT_TRUE(is_multilinear(w));
  }
  EXPECT_EQ(signatures_of_degree(3).size(), 20u);
}

TEST(Substitute, BasisProduct) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  const Assignment<Scalar> a{{yp(1), parse_rat_matrix("e11 + e44", 4)}, {yp(2), parse_rat_matrix("e13 + e24", 4)}};
  EXPECT_EQ(to_string(substitute<Scalar>(P("y1+ y2+"), a, spec)), "e13");
}

TEST(Substitute, FourOddLettersVanishGenerically) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  for (const auto& f : parse_star_poly_schema("z1 z2 z3 z4"))
    EXPECT_TRUE(substitute(f, generic_assignment(f, spec), spec).is_zero()) << to_string(f);
}

TEST(Substitute, ComponentMismatch) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  const Assignment<Scalar> a{{yp(1), parse_rat_matrix("e23", 4)}};
  EXPECT_THROW(substitute<Scalar>(P("y1+"), a, spec), ComponentMismatch);
  EXPECT_THROW(substitute<Scalar>(P("y1+ y2+"), a, spec), Error);
  const Assignment<Scalar> wrong_size{{yp(1), parse_rat_matrix("e11 + e33", 3)}};
  EXPECT_THROW(substitute<Scalar>(P("y1+"), wrong_size, spec), ShapeError);
}

TEST(Substitute, LinearInEachVariable) {
  // f(a + 2b, c) = f(a, c) + 2 f(b, c) for multilinear f.
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  const StarPoly f = P("y1+ z1- - 3 z1- y1+ + [y1+,z1-]");
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const RatMatrix a = random_element(spec, yp(1).component(), rng, 4);
    const RatMatrix b = random_element(spec, yp(1).component(), rng, 4);
    const RatMatrix c = random_element(spec, zm(1).component(), rng, 4);
    RatMatrix b2 = b;
    const auto lhs = substitute<Scalar>(f, {{yp(1), a + b2.scale(Scalar(2))}, {zm(1), c}}, spec);
    RatMatrix rb = substitute<Scalar>(f, {{yp(1), b}, {zm(1), c}}, spec);
    EXPECT_EQ(lhs, substitute<Scalar>(f, {{yp(1), a}, {zm(1), c}}, spec) + rb.scale(Scalar(2)));
  }
}

#include "starpi/images/ut3.hpp"

#include <gtest/gtest.h>

using namespace starpi;

namespace {

StarPoly P(std::string_view s) { return parse_star_poly(s); }

const StarAlgebraSpec& ut3() {
  static const auto s = ut3_super_reflection();
  return s;
}
const StarAlgebraSpec& ut3_trivial() {
  static const auto s = build_algebra(3, "000", "reflection");
  return s;
}

RatMatrix m3(std::string_view t) { return parse_rat_matrix(t, 3); }

bool reproduces(const StarPoly& f, const StarAlgebraSpec& spec, const Assignment<Scalar>& a, const RatMatrix& target) {
  for (const auto& [v, mat] : a)
    if (!in_component(spec, v.component(), mat)) return false;
  return substitute<Scalar>(f, a, spec) == target;
}

} // namespace

TEST(SampleImage, DeterministicAndInsideTheAlgebra) {
  const StarPoly f = P("y1- y2-");
  const auto a = sample_image(f, ut3(), 50, 9);
  EXPECT_EQ(a, sample_image(f, ut3(), 50, 9));
  ASSERT_EQ(a.size(), 50u);
  EXPECT_NE(a, sample_image(f, ut3(), 50, 10));
  EXPECT_THROW(sample_image(P("y1- y1-"), ut3(), 5, 1), Error);
}

TEST(MembershipSearch, WitnessesReproduceTargets) {
  const StarPoly f = P("y1+ z1+");
  const auto spec = build_algebra(4, "0101", "super-reflection");
  for (const auto* t : {"e12", "e23", "e34"}) {
    const RatMatrix target = parse_rat_matrix(t, 4);
    const auto w = membership_search(f, spec, target, 256, 1);
    ASSERT_TRUE(w) << t;
    EXPECT_TRUE(reproduces(f, spec, *w, target)) << t;
  }
  const auto zero = membership_search(f, spec, RatMatrix(4), 1, 1);
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->at(yp(1)).is_zero());
  EXPECT_FALSE(membership_search(P("y1+"), ut3(), m3("e12"), 64, 1));
  EXPECT_THROW(membership_search(P("z1+"), ut3_trivial(), m3("e12"), 4, 1), SpecError);
}

TEST(MembershipDecide, InWithWitnessOutWithCertificate) {
  const auto in = membership_decide(P("y1- y2-"), ut3_trivial(), m3("e12"));
  ASSERT_EQ(in.outcome, Membership::in);
  EXPECT_TRUE(reproduces(P("y1- y2-"), ut3_trivial(), *in.witness, m3("e12")));
  ASSERT_TRUE(in.certificate);
  EXPECT_TRUE(verify_certificate(*in.certificate).valid);

  const auto out = membership_decide(P("y1- y2-"), ut3_trivial(), m3("e12 + e23"));
  ASSERT_EQ(out.outcome, Membership::out);
  ASSERT_TRUE(out.certificate);
  EXPECT_EQ(out.certificate->kind, CertificateKind::infeasible);
  EXPECT_TRUE(verify_certificate(*out.certificate).valid);
  EXPECT_TRUE(recheck_constraints(*out.certificate).valid);

  const auto z = membership_decide(P("z1- z2+"), ut3(), m3("e22"));
  EXPECT_EQ(z.outcome, Membership::out);
}

TEST(MembershipDecide, ArityLimit) {
  EXPECT_THROW(membership_decide(P("y1- y2- y3-"), ut3_trivial(), m3("e13")), UnsupportedArity);
}

TEST(MembershipDecide, TamperedCertificatesAreRejected) {
  const auto out = membership_decide(P("y1- y2-"), ut3_trivial(), m3("e12 + e23"));
  ASSERT_TRUE(out.certificate);
  auto c = *out.certificate;
  c.cofactors[0] += Poly(1);
  EXPECT_FALSE(verify_certificate(c).valid);
  c = *out.certificate;
  c.target = "e12 - e23";
  EXPECT_FALSE(recheck_constraints(c).valid);
  c = *out.certificate;
  c.constraints.pop_back();
  EXPECT_FALSE(verify_certificate(c).valid);
}

TEST(Probe, TrivialGradingIsNotClosed) {
  const auto r = vector_space_probe(P("y1- y2-"), ut3_trivial());
  EXPECT_EQ(r.verdict, ImageVerdict::not_vector_space);
  EXPECT_TRUE(r.certified);
  ASSERT_TRUE(r.pair);
  EXPECT_EQ(to_string(r.pair->v1), "e12");
  EXPECT_EQ(to_string(r.pair->v2), "e23");
  EXPECT_TRUE(reproduces(P("y1- y2-"), ut3_trivial(), r.pair->witness1, r.pair->v1));
  EXPECT_TRUE(reproduces(P("y1- y2-"), ut3_trivial(), r.pair->witness2, r.pair->v2));
  EXPECT_EQ(r.pair->certificate.target, "e12 + e23");
  EXPECT_TRUE(verify_certificate(r.pair->certificate).valid);
  EXPECT_EQ(verdict_label(r), "not a vector space (certified)");
}

TEST(Probe, SampledVectorSpace) {
  const auto r = vector_space_probe(P("y1+ y2+"), ut3());
  EXPECT_EQ(r.verdict, ImageVerdict::vector_space);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.basis.size(), 2u);
  EXPECT_EQ(verdict_label(r), "vector space (sampled evidence)");
  for (const auto& s : sample_image(P("y1+ y2+"), ut3(), 100, 3)) EXPECT_TRUE(in_span(r.basis, s));
}

TEST(Counterexample, SmallSizes) {
  for (std::uint32_t n : {4u, 5u}) {
    const auto r = counterexample_utn(n);
    EXPECT_EQ(r.verdict, ImageVerdict::not_vector_space) << n;
    ASSERT_TRUE(r.pair);
    const auto spec = build_algebra(n, std::string("01010").substr(0, n), "super-reflection");
    EXPECT_EQ(r.pair->v1, RatMatrix::unit(n, {1, 2}));
    EXPECT_EQ(r.pair->v2, RatMatrix::unit(n, {2, 3}));
    EXPECT_TRUE(reproduces(P("y1+ z1+"), spec, r.pair->witness1, r.pair->v1));
    EXPECT_TRUE(reproduces(P("y1+ z1+"), spec, r.pair->witness2, r.pair->v2));
    const auto& c = r.pair->certificate;
    EXPECT_EQ(c.basis.generators, std::vector<Poly>{Poly(1)});
    EXPECT_TRUE(verify_certificate(c).valid);
    EXPECT_TRUE(recheck_constraints(c).valid);
  }
  EXPECT_THROW(counterexample_utn(3), NotApplicable);
}

TEST(Ut3Classify, SpecBranches) {
  EXPECT_EQ(classify_image_ut3(P("y1+ y2-")).label(), "A0minus");
  EXPECT_EQ(classify_image_ut3(P("2 y1- y2- + [y2-,y1-]")).label(), "D_2");
  EXPECT_EQ(classify_image_ut3(P("[y2-,y1-]")).label(), "span_e13");
  EXPECT_EQ(classify_image_ut3(P("y1- y2-")).label(), "J_2");
  EXPECT_EQ(classify_image_ut3(P("y1- y2- y3-")).label(), "J_3");
  EXPECT_THROW(classify_image_ut3(P("y1+ z1+")), NotApplicable);
}

TEST(Ut3Classify, OddBranches) {
  EXPECT_EQ(classify_image_ut3_odd(P("y1+ z1+")).label(), "A1");
  EXPECT_EQ(classify_image_ut3_odd(P("z1- z2+")).label(), "span_e13-from-z1z2");
  EXPECT_EQ(classify_image_ut3_odd(P("z1+ z2+ z3-")).label(), "zero");
  // a y1- z1+ - b z1+ y1- spans the line (a : b).
  EXPECT_EQ(classify_image_ut3_odd(P("2 y1- z1+ - 3 z1+ y1-")).label(), "line-in-A1(1:3/2)");
  EXPECT_EQ(classify_image_ut3_odd(P("y1- z1+")).label(), "line-in-A1(1:0)");
  EXPECT_THROW(classify_image_ut3_odd(P("y1+ y2-")), NotApplicable);
  EXPECT_EQ(classify_image_ut3_any(P("y1- y2-")).label(), "J_2");
  EXPECT_EQ(classify_image_ut3_any(P("y1+ z1+")).label(), "A1");
}

TEST(Ut3Classify, CatalogIsConsistentWithSamples) {
  const auto cat = ut3_classification_catalog();
  EXPECT_GE(cat.size(), 10u);
  std::set<std::string> kinds;
  for (const auto& e : cat) {
    const StarPoly f = P(e.poly);
    const auto c = classify_image_ut3(f);
    EXPECT_EQ(c.label(), e.expected) << e.poly;
    kinds.insert(c.label().substr(0, 2));
    const auto v = validate_ut3_class(f, c, 300, 11);
    EXPECT_TRUE(v.consistent()) << e.poly << " outside=" << v.outside;
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (v.witnesses[i]) {
        EXPECT_TRUE(reproduces(f, ut3(), *v.witnesses[i], c.basis()[i])) << e.poly;
      }
    }
  }
  for (const auto* k : {"A0", "sp", "ze", "D_", "J_"}) EXPECT_TRUE(kinds.count(k)) << k;
}

TEST(Ut3Classify, OneOddVariableStaysInA1) {
  for (const auto* s : {"y1+ z1+", "z1- y1- y2+", "3 y1- z1+ - z1+ y1-", "[z1-,y1+] y2-"}) {
    const auto c = classify_image_ut3_odd(P(s));
    EXPECT_TRUE(c.kind == Ut3Kind::A1 || c.kind == Ut3Kind::line_in_A1 || c.kind == Ut3Kind::zero) << s;
    for (const auto& m : sample_image(P(s), ut3(), 200, 4)) {
      EXPECT_TRUE(m.at({1, 1}).get_num() == 0 && m.at({1, 3}).get_num() == 0 && m.at({2, 2}).get_num() == 0) << s;
      EXPECT_TRUE(in_span(c.basis(), m)) << s;
    }
  }
}

TEST(StructureLemmas, AllPass) {
  const auto r = verify_structure_lemmas(3, 5);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.checks.empty());
}

TEST(ImageProperties, ScalingClosure) {
  // For multilinear f, c f(a1, ...) = f(c a1, ...): the image is closed under scaling.
  for (const auto* s : {"y1+ z1+", "y1- y2-", "z1- z2+"}) {
    const StarPoly f = P(s);
    for (const auto& img : sample_image(f, ut3(), 20, 8)) {
      if (img.is_zero()) continue;
      RatMatrix scaled = img;
      scaled.scale(make_scalar(-7, 3));
      const auto w = membership_search(f, ut3(), scaled, 256, 2);
      ASSERT_TRUE(w) << s;
      EXPECT_TRUE(reproduces(f, ut3(), *w, scaled));
    }
  }
}

TEST(ImageProperties, OutConstraintsRederive) {
  const std::vector<std::pair<const char*, const char*>> cases{{"y1- y2-", "e12 + e23"}, {"y1- y2-", "e11"}};
  for (const auto& [f, t] : cases) {
    const auto r = membership_decide(P(f), ut3_trivial(), m3(t));
    ASSERT_EQ(r.outcome, Membership::out) << f << " " << t;
    EXPECT_EQ(r.certificate->constraints, membership_constraints(P(f), ut3_trivial(), m3(t)));
    EXPECT_TRUE(recheck_constraints(*r.certificate).valid);
  }
}

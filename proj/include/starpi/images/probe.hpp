#pragma once

#include "starpi/freestar/parser.hpp"
#include "starpi/images/certificate.hpp"
#include "starpi/images/membership.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace starpi {

class UnsupportedArity : public Error {
public:
  using Error::Error;
};

class NotApplicable : public Error {
public:
  using Error::Error;
};

/// Entries of f(generic) - target in position order, zero entries dropped.
/// Unknowns are component coordinates, slots by variable ordinal.
inline std::vector<Poly> membership_constraints(const StarPoly& f, const StarAlgebraSpec& spec,
                                                const RatMatrix& target) {
  target.check_same(RatMatrix(spec.n()));
  const PolyMatrix value = substitute(f, generic_assignment(f, spec), spec);
  std::vector<Poly> out;
  for (const auto& p : ut_positions(spec.n())) {
    Poly e = value.at(p) - Poly(target.at(p));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

/// Parameter values matching a concrete assignment, in the generic parametrization.
inline std::map<ParamId, Scalar> witness_point(const StarPoly& f, const StarAlgebraSpec& spec,
                                               const Assignment<Scalar>& a) {
  std::map<ParamId, Scalar> point;
  std::uint32_t slot = 1;
  for (const auto& v : f.variables()) {
    const auto coords = component_coordinates(spec, v.component(), a.at(v));
    if (!coords) throw ComponentMismatch("witness value of " + to_string(v) + " is outside its component");
    const auto params = generic_parameters(spec, v.component(), slot++);
    for (std::size_t k = 0; k < params.size(); ++k) point[params[k]] = (*coords)[k];
  }
  return point;
}

inline Certificate certificate_header(const StarPoly& f, const StarAlgebraSpec& spec, const RatMatrix& target) {
  Certificate c;
  c.polynomial = to_string(f);
  c.n = spec.n();
  c.grading = spec.grading().str();
  c.involution = to_string(spec.kind());
  c.target = to_string(target);
  c.constraints = membership_constraints(f, spec, target);
  return c;
}

inline Certificate witness_certificate(const StarPoly& f, const StarAlgebraSpec& spec, const RatMatrix& target,
                                       const Assignment<Scalar>& a) {
  Certificate c = certificate_header(f, spec, target);
  c.kind = CertificateKind::witness;
  const auto point = witness_point(f, spec, a);
  // Keep only the parameters the constraints mention.
  for (const auto& g : c.constraints)
    for (const auto& p : g.parameters()) c.point[p] = point.at(p);
  return c;
}

/// Rebuilds the constraint system from the certificate's own polynomial,
/// algebra and target and compares it with the stored one.
inline CertificateCheck recheck_constraints(const Certificate& c) {
  try {
    const auto spec = build_algebra(c.n, c.grading, c.involution);
    const auto f = parse_star_poly(c.polynomial);
    const auto target = parse_rat_matrix(c.target, c.n);
    if (membership_constraints(f, spec, target) != c.constraints)
      return {false, "constraint system does not match the one derived from the polynomial and target"};
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {true, "constraint system re-derives from the polynomial, algebra and target"};
}

enum class Membership { in, out, unknown };

inline std::string to_string(Membership m) {
  switch (m) {
  case Membership::in: return "IN";
  case Membership::out: return "OUT";
  default: return "unknown";
  }
}

struct MembershipResult {
  Membership outcome = Membership::unknown;
  std::optional<Assignment<Scalar>> witness;
  std::optional<Certificate> certificate;
  std::string reason;
};

struct DecideOptions {
  std::size_t search_trials = 256;
  std::uint64_t seed = 1;
  BuchbergerLimits limits;
};

/// Exact membership for two-variable f: IN with a witness, OUT with a
/// Groebner certificate, or unknown when both the search and the basis
/// computation stop short.
inline MembershipResult membership_decide(const StarPoly& f, const StarAlgebraSpec& spec, const RatMatrix& target,
                                          const DecideOptions& opt = {}) {
  const auto vars = f.variables();
  if (vars.size() > 2)
    throw UnsupportedArity("membership_decide handles at most two variables, " + to_string(f) + " has " +
                           std::to_string(vars.size()) + "; use membership_search");
  require_multilinear(f, "membership_decide");
  MembershipResult r;
  auto found = [&](Assignment<Scalar> w) {
    r.outcome = Membership::in;
    r.certificate = witness_certificate(f, spec, target, w);
    r.witness = std::move(w);
    r.reason = "witness found";
    return r;
  };
  if (auto w = membership_search(f, spec, target, std::min<std::size_t>(opt.search_trials, 32), opt.seed))
    return found(std::move(*w));

  Certificate c = certificate_header(f, spec, target);
  const auto gb = groebner_basis(c.constraints, opt.limits);
  if (gb.complete() && ideal_contains_one(gb.basis)) {
    c.kind = CertificateKind::infeasible;
    c.basis = gb.basis;
    c.cofactors = gb.cofactors.front();
    r.outcome = Membership::out;
    r.certificate = std::move(c);
    r.reason = "constraint ideal contains 1";
    return r;
  }
  if (auto w = membership_search(f, spec, target, opt.search_trials, opt.seed + 1)) return found(std::move(*w));
  r.reason = gb.complete() ? "system is consistent but no rational witness was found"
                           : "Groebner computation stopped: " + gb.reason;
  return r;
}

enum class ImageVerdict { vector_space, not_vector_space, unknown };

inline std::string to_string(ImageVerdict v) {
  switch (v) {
  case ImageVerdict::vector_space: return "vector-space";
  case ImageVerdict::not_vector_space: return "not-vector-space";
  default: return "unknown";
  }
}

struct ImagePair {
  RatMatrix v1, v2;
  Assignment<Scalar> witness1, witness2;
  Certificate certificate;

  bool operator==(const ImagePair&) const = default;
};

struct ImageReport {
  std::string polynomial;
  std::string spec_id;
  ImageVerdict verdict = ImageVerdict::unknown;
  /// True when the verdict is exact; vector-space verdicts from sampling are not.
  bool certified = false;
  std::vector<RatMatrix> basis;
  std::optional<ImagePair> pair;
  std::size_t samples = 0;
  std::size_t sample_rank = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool operator==(const ImageReport&) const = default;
};

inline std::string verdict_label(const ImageReport& r) {
  switch (r.verdict) {
  case ImageVerdict::vector_space: return r.certified ? "vector space" : "vector space (sampled evidence)";
  case ImageVerdict::not_vector_space: return r.certified ? "not a vector space (certified)" : "not a vector space";
  default: return "unknown";
  }
}

namespace detail {

struct ImageCandidate {
  RatMatrix value;
  Assignment<Scalar> witness;
};

/// m scaled so its first nonzero packed entry is 1.
inline RatMatrix normalized(const RatMatrix& m) {
  for (const auto& e : m.packed())
    if (!is_zero(e)) {
      RatMatrix out = m;
      return out.scale(Scalar(1) / e);
    }
  return m;
}

inline std::vector<Position> support(const RatMatrix& m) {
  std::vector<Position> out;
  for (const auto& p : ut_positions(m.size()))
    if (!is_zero(m.at(p))) out.push_back(p);
  return out;
}

/// Nonzero image points up to scalar, with witnesses: basis tuples first, then
/// samples; sorted by support size, then support positions.
inline std::vector<ImageCandidate> image_candidates(const StarPoly& f, const StarAlgebraSpec& spec,
                                                    std::size_t samples, std::uint64_t seed) {
  const auto vars = f.variables();
  std::vector<ImageCandidate> out;
  auto add = [&](const RatMatrix& v, Assignment<Scalar> a) {
    if (v.is_zero()) return;
    const Scalar lead = [&] {
      for (const auto& e : v.packed())
        if (!is_zero(e)) return e;
      return Scalar(1);
    }();
    RatMatrix n = normalized(v);
    for (const auto& c : out)
      if (c.value == n) return;
    // Rescale the first variable so the witness maps to the normalized value.
    a.at(vars.front()).scale(Scalar(1) / lead);
    out.push_back({std::move(n), std::move(a)});
  };
  std::size_t total = 1;
  for (const auto& v : vars) total *= spec.component(v.component()).size();
  if (total <= 4096) {
    std::vector<std::size_t> idx(vars.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
      Assignment<Scalar> a;
      for (std::size_t k = 0; k < vars.size(); ++k)
        a.emplace(vars[k], spec.component(vars[k].component())[idx[k]].matrix(spec.n()));
      add(substitute<Scalar>(f, a, spec), a);
      for (std::size_t k = vars.size(); k-- > 0;) {
        if (++idx[k] < spec.component(vars[k].component()).size()) break;
        idx[k] = 0;
      }
    }
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    Assignment<Scalar> a;
    for (const auto& v : vars) a.emplace(v, random_element(spec, v.component(), rng, 3));
    add(substitute<Scalar>(f, a, spec), a);
  }
  std::stable_sort(out.begin(), out.end(), [](const ImageCandidate& a, const ImageCandidate& b) {
    const auto sa = support(a.value), sb = support(b.value);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  return out;
}

/// Linearly independent subset of the matrices, in order.
inline std::vector<RatMatrix> independent_subset(const std::vector<RatMatrix>& ms) {
  std::vector<RatMatrix> out;
  ScalarRows rows;
  for (const auto& m : ms) {
    rows.push_back(flatten_matrix(m));
    if (matrix_rank(rows) > out.size())
      out.push_back(m);
    else
      rows.pop_back();
  }
  return out;
}

} // namespace detail

struct ProbeOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  /// Candidate pairs tested with membership_decide (bilinear f only).
  std::size_t max_pairs = 120;
  DecideOptions decide;
};

/// Looks for v1, v2 in the image with v1 + v2 outside it. Without one, spans
/// the samples and checks that random span elements re-enter the image.
inline ImageReport vector_space_probe(const StarPoly& f, const StarAlgebraSpec& spec, const ProbeOptions& opt = {}) {
  require_multilinear(f, "vector_space_probe");
  ImageReport r;
  r.polynomial = to_string(f);
  r.spec_id = spec.id();
  r.trials = opt.trials;
  r.seed = opt.seed;
  const auto vars = f.variables();
  for (const auto& v : vars)
    if (spec.component(v.component()).empty())
      throw SpecError("variable " + to_string(v) + " needs component " + to_string(v.component()) +
                      ", which is zero in " + spec.id());

  const auto candidates = detail::image_candidates(f, spec, opt.trials, opt.seed);
  r.samples = opt.trials;
  if (candidates.empty()) {
    r.verdict = ImageVerdict::vector_space;
    r.certified = false;
    r.note = "every evaluation tried is zero";
    return r;
  }

  if (vars.size() == 2) {
    std::size_t tested = 0;
    bool unresolved = false;
    for (std::size_t j = 1; j < candidates.size() && tested < opt.max_pairs; ++j)
      for (std::size_t i = 0; i < j && tested < opt.max_pairs; ++i, ++tested) {
        const RatMatrix sum = candidates[i].value + candidates[j].value;
        auto d = membership_decide(f, spec, sum, opt.decide);
        if (d.outcome == Membership::unknown) unresolved = true;
        if (d.outcome != Membership::out) continue;
        r.verdict = ImageVerdict::not_vector_space;
        r.certified = true;
        r.pair = ImagePair{candidates[i].value, candidates[j].value, candidates[i].witness, candidates[j].witness,
                           std::move(*d.certificate)};
        r.note = "sum of the pair is certified outside the image";
        return r;
      }
    if (unresolved) r.note = "some candidate sums were undecided; ";
  }

  std::vector<RatMatrix> values;
  for (const auto& c : candidates) values.push_back(c.value);
  r.basis = detail::independent_subset(values);
  r.sample_rank = r.basis.size();
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t checks = std::max<std::size_t>(8, 2 * r.basis.size());
  for (std::size_t t = 0; t < checks; ++t) {
    RatMatrix v(spec.n());
    for (const auto& b : r.basis) {
      RatMatrix term = b;
      v += term.scale(random_scalar(rng, 5));
    }
    if (!membership_search(f, spec, v, 256, opt.seed + 17 + t)) {
      r.verdict = ImageVerdict::unknown;
      r.note += "a random element of the sampled span " + to_string(v) + " was not found in the image";
      return r;
    }
  }
  r.verdict = ImageVerdict::vector_space;
  r.certified = false;
  r.note += "random elements of the sampled span re-enter the image";
  return r;
}

/// The n >= 4 non-closure example: f = y+ z+ on UT_n with grading 0101...
/// (a trailing 0 for odd n) and super-reflection.
inline ImageReport counterexample_utn(std::uint32_t n, const DecideOptions& opt = {}) {
  if (n < 4)
    throw NotApplicable("counterexample_utn requires n >= 4 (the statement is for UT_n with n >= 4), got n = " +
                        std::to_string(n));
  std::string grading;
  for (std::uint32_t i = 0; i < n; ++i) grading += (i % 2 == 0) ? '0' : '1';
  const auto spec = build_algebra(n, grading, "super-reflection");
  const StarPoly f = letter(yp(1)) * letter(zp(1));
  const auto y = yp(1), z = zp(1);

  auto e = [&](std::uint32_t i, std::uint32_t j) { return RatMatrix::unit(n, {i, j}); };
  auto element = [&](const ComponentTag& tag, const Position& rep) {
    for (const auto& b : spec.component(tag))
      if (b.representative == rep) return b.matrix(n);
    throw Error("no basis element with representative " + to_string(rep));
  };
  const ComponentTag even_sym{0, Symmetry::plus}, odd_sym{1, Symmetry::plus};

  ImageReport r;
  r.polynomial = to_string(f);
  r.spec_id = spec.id();
  r.seed = opt.seed;
  ImagePair pair;
  pair.v1 = e(1, 2);
  pair.v2 = e(2, 3);
  // e12 = (e11 + enn)(e12 + e_{n-1,n}); e23 = (e22 + e_{n-1,n-1}) B with B the odd
  // symmetric basis element through (2,3).
  pair.witness1 = {{y, element(even_sym, {1, 1})}, {z, element(odd_sym, {1, 2})}};
  pair.witness2 = {{y, element(even_sym, {2, 2})}, {z, element(odd_sym, {2, 3})}};
  if (!(substitute<Scalar>(f, pair.witness1, spec) == pair.v1) ||
      !(substitute<Scalar>(f, pair.witness2, spec) == pair.v2))
    throw Error("counterexample witnesses do not evaluate to e12 and e23 in " + spec.id());

  auto d = membership_decide(f, spec, pair.v1 + pair.v2, opt);
  if (d.outcome != Membership::out) {
    r.verdict = ImageVerdict::unknown;
    r.note = "e12 + e23 was not certified outside the image: " + d.reason;
    return r;
  }
  pair.certificate = std::move(*d.certificate);
  r.pair = std::move(pair);
  r.verdict = ImageVerdict::not_vector_space;
  r.certified = true;
  r.note = "e12 and e23 are images, e12 + e23 is not";
  return r;
}

} // namespace starpi

#pragma once

#include "starpi/exactmath/linalg.hpp"
#include "starpi/freestar/substitute.hpp"

#include <optional>
#include <vector>

namespace starpi {

inline void require_multilinear(const StarPoly& f, const char* op) {
  if (f.is_zero()) return;
  if (!f.is_multilinear())
    throw Error(std::string(op) + ": polynomial " + to_string(f) + " is not multilinear");
}

/// `trials` evaluations of f at random component elements; deterministic in seed.
inline std::vector<RatMatrix> sample_image(const StarPoly& f, const StarAlgebraSpec& spec, std::size_t trials,
                                           std::uint64_t seed, std::int64_t bound = 3) {
  require_multilinear(f, "sample_image");
  Rng rng(seed);
  const auto vars = f.variables();
  std::vector<RatMatrix> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Assignment<Scalar> a;
    for (const auto& v : vars) a.emplace(v, random_element(spec, v.component(), rng, bound));
    out.push_back(substitute<Scalar>(f, a, spec));
  }
  return out;
}

/// Packed entries of an upper-triangular matrix as a vector.
inline ScalarVector flatten_matrix(const RatMatrix& m) { return m.packed(); }

namespace detail {

/// Random element of the component with about half of the coordinates zero.
inline RatMatrix sparse_random_element(const StarAlgebraSpec& spec, const ComponentTag& tag, Rng& rng,
                                       std::int64_t bound) {
  std::vector<Scalar> coords;
  for (std::size_t k = 0; k < spec.component(tag).size(); ++k) {
    if (uniform_int(rng, 0, 1) == 0) {
      coords.emplace_back(0);
      continue;
    }
    Scalar s;
    do s = random_scalar(rng, bound);
    while (is_zero(s));
    coords.push_back(s);
  }
  return combine(spec, tag, coords);
}

} // namespace detail

/// Searches for a preimage of target: all variables but one are fixed at
/// random, then f is linear in the free one and its component coordinates are
/// solved for exactly. Returns a witness that re-evaluates to target.
inline std::optional<Assignment<Scalar>> membership_search(const StarPoly& f, const StarAlgebraSpec& spec,
                                                           const RatMatrix& target, std::size_t trials,
                                                           std::uint64_t seed) {
  require_multilinear(f, "membership_search");
  target.check_same(RatMatrix(spec.n()));
  const auto vars = f.variables();
  for (const auto& v : vars)
    if (spec.component(v.component()).empty())
      throw SpecError("variable " + to_string(v) + " needs component " + to_string(v.component()) +
                      ", which is zero in " + spec.id());
  if (target.is_zero()) {
    Assignment<Scalar> zero;
    for (const auto& v : vars) zero.emplace(v, RatMatrix(spec.n()));
    return zero;
  }
  if (vars.empty()) return std::nullopt;
  Rng rng(seed);
  const ScalarVector goal = flatten_matrix(target);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t free = t % vars.size();
    const std::int64_t bound = 1 + static_cast<std::int64_t>(t / (4 * vars.size()));
    Assignment<Scalar> a;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (k != free) a.emplace(vars[k], detail::sparse_random_element(spec, vars[k].component(), rng, bound));
    const auto& basis = spec.component(vars[free].component());
    ScalarRows columns;
    for (const auto& b : basis) {
      a[vars[free]] = b.matrix(spec.n());
      columns.push_back(flatten_matrix(substitute<Scalar>(f, a, spec)));
    }
    const auto x = linear_solve(transpose(columns), goal);
    if (!x) continue;
    a[vars[free]] = combine(spec, vars[free].component(), *x);
    if (substitute<Scalar>(f, a, spec) == target) return a;
  }
  return std::nullopt;
}

} // namespace starpi

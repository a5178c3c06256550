#pragma once

#include "starpi/freestar/substitute.hpp"

#include <map>
#include <optional>

namespace starpi {

struct IdentityVerdict {
  bool is_identity = true;
  /// Present iff !is_identity: concrete values, one per variable of f.
  std::optional<Assignment<Scalar>> witness;
  /// f at the witness (nonzero when a witness is present).
  RatMatrix value;
  /// A position where the generic evaluation is a nonzero polynomial.
  std::optional<Position> position;
};

namespace detail {

inline RatMatrix specialize_element(const StarAlgebraSpec& spec, const VarSymbol& v, std::uint32_t slot,
                                    const std::map<ParamId, Scalar>& values) {
  return evaluate(generic_element(spec, v.component(), slot), values);
}

/// Tries every tuple of single basis elements in a fixed order; returns the
/// first tuple with f != 0, if the search space is small enough.
inline std::optional<Assignment<Scalar>> basis_witness(const StarPoly& f, const StarAlgebraSpec& spec,
                                                       std::size_t cap) {
  const auto vars = f.variables();
  std::size_t total = 1;
  for (const auto& v : vars) {
    total *= spec.component(v.component()).size();
    if (total > cap) return std::nullopt;
  }
  std::vector<std::size_t> idx(vars.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    Assignment<Scalar> a;
    for (std::size_t k = 0; k < vars.size(); ++k)
      a.emplace(vars[k], spec.component(vars[k].component())[idx[k]].matrix(spec.n()));
    if (!substitute<Scalar>(f, a, spec).is_zero()) return a;
    for (std::size_t k = vars.size(); k-- > 0;) {
      if (++idx[k] < spec.component(vars[k].component()).size()) break;
      idx[k] = 0;
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Decides whether f vanishes on the algebra by generic substitution. When it
/// does not, returns a rational witness: single basis elements if any tuple
/// works, otherwise a random point of the nonzero entry polynomial.
inline IdentityVerdict is_identity(const StarPoly& f, const StarAlgebraSpec& spec, std::uint64_t seed = 1) {
  IdentityVerdict v;
  v.value = RatMatrix(spec.n());
  const auto vars = f.variables();
  for (const auto& x : vars)
    if (spec.component(x.component()).empty())
      throw SpecError("variable " + to_string(x) + " needs component " + to_string(x.component()) +
                      ", which is zero in " + spec.id());
  if (f.is_zero()) return v;

  const auto generic = generic_assignment(f, spec);
  const PolyMatrix value = substitute(f, generic, spec);
  const Poly* nonzero = nullptr;
  for (const auto& p : ut_positions(spec.n()))
    if (!value.at(p).is_zero()) {
      v.position = p;
      nonzero = &value.at(p);
      break;
    }
  if (!nonzero) return v;
  v.is_identity = false;

  if (auto w = detail::basis_witness(f, spec, 4096)) {
    v.value = substitute<Scalar>(f, *w, spec);
    v.witness = std::move(w);
    return v;
  }
  Rng rng(seed);
  for (std::int64_t bound = 1;; bound = bound < (1 << 20) ? bound * 2 : bound) {
    std::map<ParamId, Scalar> point;
    for (const auto& p : nonzero->parameters()) point[p] = random_scalar(rng, bound);
    if (is_zero(nonzero->eval(point))) continue;
    // Parameters absent from the chosen entry still need values.
    Assignment<Scalar> a;
    std::uint32_t slot = 1;
    for (const auto& x : vars) {
      for (const auto& pid : generic_parameters(spec, x.component(), slot))
        if (!point.count(pid)) point[pid] = random_scalar(rng, bound);
      a.emplace(x, detail::specialize_element(spec, x, slot, point));
      ++slot;
    }
    v.value = substitute<Scalar>(f, a, spec);
    v.witness = std::move(a);
    return v;
  }
}

/// True iff every random rational evaluation in `trials` is zero.
inline bool random_evaluations_vanish(const StarPoly& f, const StarAlgebraSpec& spec, std::size_t trials,
                                      std::uint64_t seed, std::int64_t bound = 5) {
  Rng rng(seed);
  const auto vars = f.variables();
  for (std::size_t t = 0; t < trials; ++t) {
    Assignment<Scalar> a;
    for (const auto& x : vars) a.emplace(x, random_element(spec, x.component(), rng, bound));
    if (!substitute<Scalar>(f, a, spec).is_zero()) return false;
  }
  return true;
}

} // namespace starpi

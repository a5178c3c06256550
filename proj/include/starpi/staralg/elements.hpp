#pragma once

#include "starpi/staralg/algebra.hpp"

namespace starpi {

/// sum_b xi_b^{(slot)} B_b over the component basis, one fresh parameter per
/// basis element, named after the element's representative position.
inline PolyMatrix generic_element(const StarAlgebraSpec& spec, const ComponentTag& tag,
                                  std::uint32_t slot) {
  const auto& basis = spec.component(tag);
  if (basis.empty())
    throw SpecError("component " + to_string(tag) + " of " + spec.id() + " is zero");
  PolyMatrix m(spec.n());
  for (const auto& b : basis) {
    const Poly xi = Poly::variable({b.representative.row, b.representative.col, slot});
    for (const auto& u : b.units) m.at(u.pos) += u.sign > 0 ? xi : -xi;
  }
  return m;
}

/// The parameters generic_element(spec, tag, slot) introduces, in basis order.
inline std::vector<ParamId> generic_parameters(const StarAlgebraSpec& spec, const ComponentTag& tag,
                                               std::uint32_t slot) {
  std::vector<ParamId> out;
  for (const auto& b : spec.component(tag))
    out.push_back({b.representative.row, b.representative.col, slot});
  return out;
}

/// Combination of basis elements with the given coordinates.
inline RatMatrix combine(const StarAlgebraSpec& spec, const ComponentTag& tag,
                         const std::vector<Scalar>& coords) {
  const auto& basis = spec.component(tag);
  if (coords.size() != basis.size())
    throw ShapeError("component " + to_string(tag) + " has dimension " +
                     std::to_string(basis.size()) + ", got " + std::to_string(coords.size()) +
                     " coordinates");
  RatMatrix m(spec.n());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& u : basis[k].units) m.at(u.pos) += u.sign * coords[k];
  return m;
}

/// Random rational combination of the component basis, deterministic in rng.
inline RatMatrix random_element(const StarAlgebraSpec& spec, const ComponentTag& tag, Rng& rng,
                                std::int64_t bound) {
  const auto& basis = spec.component(tag);
  if (basis.empty())
    throw SpecError("component " + to_string(tag) + " of " + spec.id() + " is zero");
  std::vector<Scalar> coords;
  for (std::size_t k = 0; k < basis.size(); ++k) coords.push_back(random_scalar(rng, bound));
  return combine(spec, tag, coords);
}

inline RatMatrix random_element(const StarAlgebraSpec& spec, const ComponentTag& tag,
                                std::uint64_t seed, std::int64_t bound) {
  Rng rng(seed);
  return random_element(spec, tag, rng, bound);
}

} // namespace starpi

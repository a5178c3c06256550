#pragma once

#include "starpi/staralg/elements.hpp"

#include <string>

namespace starpi::proptest {

struct PropertyTally {
  std::size_t pairs = 0;
  std::size_t order_two = 0;
  std::size_t sign_rule = 0;
  std::size_t grading = 0;
  std::string first_failure;

  bool all_passed() const { return order_two == pairs && sign_rule == pairs && grading == pairs; }
};

/// Random homogeneous a, b: checks a** = a, (ab)* = (-1)^{|a||b|} b* a* for
/// super kinds (b* a* otherwise) and deg a* = deg a.
inline PropertyTally check_star_properties(const StarAlgebraSpec& spec, std::size_t pairs, std::uint64_t seed) {
  PropertyTally t;
  Rng rng(seed);
  auto random_homogeneous = [&](std::uint8_t parity) {
    RatMatrix m(spec.n());
    for (const auto& p : ut_positions(spec.n()))
      if (spec.grading().degree(p) == parity) m.at(p) = random_scalar(rng, 4);
    return m;
  };
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto pa = static_cast<std::uint8_t>(uniform_int(rng, 0, 1));
    const auto pb = static_cast<std::uint8_t>(uniform_int(rng, 0, 1));
    const RatMatrix a = random_homogeneous(pa), b = random_homogeneous(pb);
    ++t.pairs;
    const RatMatrix as = apply_star(spec, a), bs = apply_star(spec, b);
    if (apply_star(spec, as) == a)
      ++t.order_two;
    else if (t.first_failure.empty())
      t.first_failure = "order two fails at " + to_string(a);
    RatMatrix rhs = bs * as;
    if (is_super(spec.kind()) && pa == 1 && pb == 1) rhs.scale(Scalar(-1));
    if (apply_star(spec, a * b) == rhs)
      ++t.sign_rule;
    else if (t.first_failure.empty())
      t.first_failure = "sign rule fails at a = " + to_string(a) + ", b = " + to_string(b);
    const auto d = homogeneous_degree(spec, as);
    if (d && (a.is_zero() || *d == pa))
      ++t.grading;
    else if (t.first_failure.empty())
      t.first_failure = "degree not preserved at " + to_string(a);
  }
  return t;
}

} // namespace starpi::proptest

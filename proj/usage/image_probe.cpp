// Is the image of a bilinear polynomial a vector space?
#include "starpi/images/probe.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace starpi;
  const auto spec = build_algebra(3, "000", "reflection");
  const StarPoly f = parse_star_poly(argc > 1 ? argv[1] : "y1- y2-");
  const auto r = vector_space_probe(f, spec);
  std::cout << to_string(f) << " on " << spec.id() << ": " << verdict_label(r) << "\n";
  if (r.pair) {
    std::cout << "  " << to_string(r.pair->v1) << " and " << to_string(r.pair->v2) << " are values, their sum is not\n";
    std::cout << "  certificate: " << verify_certificate(r.pair->certificate).reason << "\n";
  }
  for (const auto& b : r.basis) std::cout << "  basis " << to_string(b) << "\n";
}

// Prints the codimension table of UT4 with grading 0101 and the super-symplectic involution.
#include "starpi/pi/codim.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  const std::uint32_t max_degree = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 4;
  const auto spec = starpi::build_algebra(4, "0101", "super-symplectic");
  for (std::uint32_t n = 1; n <= max_degree; ++n) {
    const auto r = starpi::codim_total(spec, n);
    std::printf("n=%u  c_n=%s  closed form=%s\n", n, r.total.get_str().c_str(), r.closed_form->get_str().c_str());
  }
}

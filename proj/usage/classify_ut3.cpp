#include "starpi/images/ut3.hpp"

#include <iostream>

int main() {
  for (const auto& e : starpi::ut3_classification_catalog()) {
    const auto c = starpi::classify_image_ut3(starpi::parse_star_poly(e.poly));
    std::cout << c.label() << "\t" << e.poly << "\n";
  }
}

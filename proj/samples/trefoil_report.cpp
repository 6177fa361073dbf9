// Prints invariants of the left-handed trefoil and checks the slope theorem.

#include <iostream>

#include "knotslope/knotslope.hpp"

int main() {
  using namespace knotslope;

  const auto d = build_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  std::cout << "Jones:      " << jones_polynomial(d).to_string() << '\n';

  const auto sig = knot_signature(d);
  std::cout << "signature:  " << sig.sigma_k << " (sigma(G) " << sig.sigma_g << ", mu " << sig.mu << ")\n";

  const auto slopes = checkerboard_slopes(d);
  std::cout << "slopes:     " << slopes.max_slope << ", " << slopes.min_slope << '\n';

  const auto verdicts = verify_main_theorem(d);
  std::cout << "theorem:    max " << to_string(verdicts.max_slope) << ", min " << to_string(verdicts.min_slope) << '\n';
  return verdicts.max_slope == Verdict::Holds && verdicts.min_slope == Verdict::Holds ? 0 : 1;
}

// Direct library use without the CLI.
// Build: g++ -std=c++20 -O2 -I include samples/minimal.cpp -o minimal

#include <cstdio>

#include "omega5/charpoly.hpp"
#include "omega5/necessity.hpp"
#include "omega5/region.hpp"

int main() {
  using namespace omega5;

  // a mixture of two fixed-point-free permutations
  Perm pi = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  Perm beta = Perm::from_cycles(5, {{1, 2, 4}, {3, 5}});
  ConvexCombo combo({pi, beta}, {0.3, 0.7});

  CharPolyCoeffs k = coeffs_direct(to_matrix(combo));
  std::printf("coefficients: k2=%.6f k3=%.6f k4=%.6f k5=%.6f\n", k.k2, k.k3, k.k4, k.k5);

  NecessityReport rep = check_necessary(k);
  std::printf("screen: %s\n", rep.passes ? "not ruled out" : "rejected");

  for (const auto& z : roots(k).roots) std::printf("  root %+.6f %+.6fi\n", z.real(), z.imag());

  BoundaryTransition bt = boundary_transition_detail();
  std::printf("tracked-pair event at t = %.6f\n", bt.t_star);
  return 0;
}

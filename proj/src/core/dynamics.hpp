#pragma once

#include <vector>

#include "rng.hpp"
#include "types.hpp"

namespace ecwsa {

// Per-whale per-iteration movement coefficients. A is a single scalar per
// whale (the movement branch tests |A| once); C and l are drawn per
// dimension.
struct DynamicsParams {
  double a = 2.0;
  double A = 0.0;
  std::vector<double> C;
  std::vector<double> l;
  double b = 1.0;
  double p = 0.0;
};

// Linear decay from 2 at t=0 to 0 at t=max_iter.
double decay_a(int t, int max_iter);

// Draws A = 2a*u - a (scalar), C_j = 2*u_j, and l_j in [-1,1], in that order.
DynamicsParams draw_dynamics_params(double a, double b, double p, int dimensions,
                                    RngStream& rng);

// x'_j = |prey_j - x_j| * e^(b*l_j) * cos(2*pi*l_j) + prey_j, clipped.
std::vector<double> spiral_move(const std::vector<double>& x, const std::vector<double>& prey,
                                double b, const std::vector<double>& l);

// D_j = |C_j*target_j - x_j|; x'_j = target_j - A*D_j, clipped. Serves both
// exploitation (target = prey) and exploration (target = random whale).
std::vector<double> encircle_move(const std::vector<double>& x,
                                  const std::vector<double>& target, double A,
                                  const std::vector<double>& C);

// p < 0.5 and |A| < 1: encircle toward the prey; p < 0.5 and |A| >= 1:
// encircle toward a uniformly random population member; p >= 0.5: spiral
// toward the prey. Returns a rebinarized, repair-checked whale with an empty
// fitness cache.
Whale dispatch_move(const Whale& whale, const Whale& prey, const std::vector<Whale>& population,
                    const DynamicsParams& params, RngStream& rng);

}  // namespace ecwsa

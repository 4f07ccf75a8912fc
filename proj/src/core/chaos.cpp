#include "chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ecwsa {

ChaosState make_chaos_state(ChaosMap map, double initial_p, ChaosParams params,
                            std::uint64_t rng_seed) {
  if (!(initial_p >= 0.0 && initial_p <= 1.0))
    throw std::invalid_argument("chaos initial p must be in [0,1]");
  if (!(params.piecewise_a > 0.0 && params.piecewise_a < 0.5))
    throw std::invalid_argument("piecewise parameter must be in (0,0.5)");
  ChaosState state;
  state.map = map;
  state.p = initial_p;
  state.params = params;
  state.rng = RngStream(rng_seed);
  return state;
}

double chaos_next(ChaosState& state) {
  const double p = state.p;
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_state_error("chaos p outside [0,1]");
  const ChaosParams& prm = state.params;
  double next = 0.0;
  switch (state.map) {
    case ChaosMap::Circular: {
      constexpr double two_pi = 2.0 * std::numbers::pi;
      next = std::fmod(p + prm.circular_b - (prm.circular_a / two_pi) * std::sin(two_pi * p),
                       1.0);
      if (next < 0.0) next += 1.0;  // wrap negatives to the positive representative
      break;
    }
    case ChaosMap::Logistic:
      next = prm.logistic_a * p * (1.0 - p);
      break;
    case ChaosMap::Piecewise: {
      const double a = prm.piecewise_a;
      if (p < a)
        next = p / a;
      else if (p < 0.5)
        next = (p - a) / (0.5 - a);
      else if (p < 1.0 - a)
        next = (1.0 - a - p) / (0.5 - a);
      else
        next = (1.0 - p) / a;
      break;
    }
    case ChaosMap::Tent:
      // Second branch applies for p >= 0.7.
      next = p < 0.7 ? p / 0.7 : 10.0 * (1.0 - p) / 3.0;
      break;
    case ChaosMap::UniformRandom:
      next = state.rng.next_unit();
      break;
  }
  state.p = std::clamp(next, 0.0, 1.0);
  return state.p;
}

std::vector<double> chaos_orbit(ChaosState state, int steps) {
  if (steps < 1) throw std::invalid_argument("orbit needs steps >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out.push_back(chaos_next(state));
  return out;
}

}  // namespace ecwsa

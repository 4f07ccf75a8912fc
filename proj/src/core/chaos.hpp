#pragma once

#include <vector>

#include "rng.hpp"
#include "types.hpp"

namespace ecwsa {

// Standard fully-chaotic parameterizations; the recurrences leave a and b
// free, these are the usual choices.
struct ChaosParams {
  double circular_a = 0.5;
  double circular_b = 0.2;
  double logistic_a = 4.0;
  double piecewise_a = 0.4;  // must be in (0, 0.5)
};

// One recurrence on [0,1] driving the movement-selection parameter p. The
// uniform-random map is the non-chaotic fallback and is the only one that
// consumes the embedded RNG stream.
struct ChaosState {
  ChaosMap map = ChaosMap::Tent;
  double p = 0.3;
  ChaosParams params;
  RngStream rng{0};
};

ChaosState make_chaos_state(ChaosMap map, double initial_p, ChaosParams params = {},
                            std::uint64_t rng_seed = 0);

// Advances the state one step and returns the new p. Throws
// invalid_state_error if the current p is outside [0,1].
double chaos_next(ChaosState& state);

// p values over `steps` iterations. steps >= 1.
std::vector<double> chaos_orbit(ChaosState state, int steps);

}  // namespace ecwsa

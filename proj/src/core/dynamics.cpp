#include "dynamics.hpp"

#include <cmath>
#include <numbers>

namespace ecwsa {

double decay_a(int t, int max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (t < 0 || t > max_iter) throw std::invalid_argument("iteration index out of range");
  return 2.0 - static_cast<double>(t) * 2.0 / static_cast<double>(max_iter);
}

DynamicsParams draw_dynamics_params(double a, double b, double p, int dimensions,
                                    RngStream& rng) {
  DynamicsParams params;
  params.a = a;
  params.b = b;
  params.p = p;
  params.A = 2.0 * a * rng.next_unit() - a;
  params.C.resize(static_cast<std::size_t>(dimensions));
  for (double& c : params.C) c = 2.0 * rng.next_unit();
  params.l.resize(static_cast<std::size_t>(dimensions));
  for (double& l : params.l) l = rng.next_range(-1.0, 1.0);
  return params;
}

std::vector<double> spiral_move(const std::vector<double>& x, const std::vector<double>& prey,
                                double b, const std::vector<double>& l) {
  if (x.size() != prey.size() || x.size() != l.size())
    throw std::invalid_argument("spiral_move: vector length mismatch");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double dist = std::abs(prey[j] - x[j]);
    out[j] = clip_position(dist * std::exp(b * l[j]) * std::cos(two_pi * l[j]) + prey[j]);
  }
  return out;
}

std::vector<double> encircle_move(const std::vector<double>& x,
                                  const std::vector<double>& target, double A,
                                  const std::vector<double>& C) {
  if (x.size() != target.size() || x.size() != C.size())
    throw std::invalid_argument("encircle_move: vector length mismatch");
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double dist = std::abs(C[j] * target[j] - x[j]);
    out[j] = clip_position(target[j] - A * dist);
  }
  return out;
}

Whale dispatch_move(const Whale& whale, const Whale& prey, const std::vector<Whale>& population,
                    const DynamicsParams& params, RngStream& rng) {
  if (population.empty()) throw std::invalid_argument("dispatch_move: empty population");
  std::vector<double> next;
  if (params.p < 0.5) {
    if (std::abs(params.A) < 1.0) {
      next = encircle_move(whale.position, prey.position, params.A, params.C);
    } else {
      const auto pick = static_cast<std::size_t>(rng.next_below(population.size()));
      next = encircle_move(whale.position, population[pick].position, params.A, params.C);
    }
  } else {
    next = spiral_move(whale.position, prey.position, params.b, params.l);
  }
  return make_whale(std::move(next), rng);
}

}  // namespace ecwsa

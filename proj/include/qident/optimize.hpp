// Copyright 2026 The qident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Derivative-free maximization over real qubit encodings.
//
// An encoding of m values is parametrized by m-1 angles: the first state is
// pinned to |0> and state k is cos(t_k)|0> + sin(t_k)|1>, t_k in [0, pi).
// Every objective here depends only on overlap moduli, so pinning the first
// state loses nothing.
//
// The search is an exhaustive grid with step `resolution * pi`, followed by
// rounds of joint local grid refinement: each round re-grids the box
// [x - h, x + h]^k around the incumbent with step h / shrink, moving the box
// while that keeps improving.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qident/game.hpp"

namespace qident {

struct OptimizationResult {
  std::string objective_name;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<std::string> parameter_names;
  std::vector<double> best_parameters;
  double grid_resolution = 0.0;
  int refinement_rounds = 0;
  // Best value on the coarse grid, before refinement.
  double grid_value = -std::numeric_limits<double>::infinity();
  std::map<std::string, double> diagnostics;
};

struct GridOptions {
  double resolution = 0.005;
  int refinement_rounds = 3;
  int shrink = 10;
  int jobs = 1;
};

using AngleObjective = std::function<double(const std::vector<double>&)>;

namespace detail {

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> params;
};

// Higher value wins; ties go to the lexicographically smaller parameters so
// the outcome does not depend on evaluation order.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(),
                                      b.params.end());
}

inline double wrap_angle(double t) {
  double w = std::fmod(t, std::numbers::pi);
  if (w < 0) w += std::numbers::pi;
  return w;
}

// Evaluates f on the product grid origin + step * (offset + i), i in [0, count)^dims.
// The first coordinate is split across workers.
inline Candidate scan(const AngleObjective& f, const std::vector<double>& origin, double step,
                      int offset, int count, int jobs) {
  const auto dims = origin.size();
  jobs = std::clamp(jobs, 1, count);
  std::vector<Candidate> best(static_cast<std::size_t>(jobs));
  std::int64_t inner = 1;
  for (std::size_t k = 1; k < dims; ++k) inner *= count;
  auto work = [&](int worker) {
    std::vector<double> x(dims);
    Candidate& local = best[static_cast<std::size_t>(worker)];
    for (int i0 = worker; i0 < count; i0 += jobs) {
      x[0] = origin[0] + step * (offset + i0);
      for (std::int64_t flat = 0; flat < inner; ++flat) {
        std::int64_t rest = flat;
        for (std::size_t k = dims - 1; k >= 1; --k) {
          x[k] = origin[k] + step * (offset + static_cast<int>(rest % count));
          rest /= count;
        }
        const double v = f(x);
        if (v > local.value || (v == local.value && better(Candidate{v, x}, local))) {
          local.value = v;
          local.params = x;
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  Candidate out;
  for (auto& c : best) {
    if (better(c, out)) out = std::move(c);
  }
  return out;
}

inline void require_resolution(double resolution) {
  if (!(resolution > 0.0) || resolution > 0.01) {
    throw InvalidParameterError("resolution must lie in (0, 0.01]");
  }
}

}  // namespace detail

inline constexpr int kMaxRecenters = 200;

inline int grid_points(double resolution) {
  return static_cast<int>(std::ceil(1.0 / resolution - 1e-9));
}

// Maximizes f over [0, pi)^dims. Parameters in the result are wrapped into [0, pi).
inline OptimizationResult grid_maximize(std::string name, std::vector<std::string> parameter_names,
                                        const AngleObjective& f, const GridOptions& opts) {
  if (!(opts.resolution > 0.0)) throw InvalidParameterError("resolution must be positive");
  const std::size_t dims = parameter_names.size();
  const double step = opts.resolution * std::numbers::pi;
  const int count = grid_points(opts.resolution);

  detail::Candidate best = detail::scan(f, std::vector<double>(dims, 0.0), step, 0, count, opts.jobs);
  OptimizationResult r;
  r.grid_value = best.value;

  double h = step;
  for (int round = 0; round < opts.refinement_rounds; ++round) {
    const double fine = h / opts.shrink;
    // Re-center until the box stops improving; ridges may run diagonally.
    for (int move = 0; move < kMaxRecenters; ++move) {
      detail::Candidate local =
          detail::scan(f, best.params, fine, -opts.shrink, 2 * opts.shrink + 1, opts.jobs);
      if (!(local.value > best.value)) break;
      best = std::move(local);
    }
    h = fine;
  }

  r.objective_name = std::move(name);
  r.parameter_names = std::move(parameter_names);
  r.best_value = best.value;
  r.best_parameters = best.params;
  for (double& t : r.best_parameters) t = detail::wrap_angle(t);
  r.grid_resolution = opts.resolution;
  r.refinement_rounds = opts.refinement_rounds;
  return r;
}

// |0> followed by cos(t)|0> + sin(t)|1> for each angle.
inline std::vector<PureState> real_qubit_states(const std::vector<double>& angles) {
  std::vector<PureState> states{PureState::basis(2, 0)};
  for (double t : angles) states.push_back(PureState::real_qubit(t));
  return states;
}

namespace objective {

// |<t_i|t_k>| for real qubit angles, with t_0 = 0 implied.
inline double angle_overlap(double ti, double tk) { return std::abs(std::cos(ti - tk)); }

template <class Fn>
inline void for_each_pair(const std::vector<double>& free, Fn&& fn) {
  const std::size_t m = free.size() + 1;
  auto angle = [&](std::size_t i) { return i == 0 ? 0.0 : free[i - 1]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) fn(angle_overlap(angle(i), angle(k)));
  }
}

inline double min_pairwise_success(const std::vector<double>& free) {
  double best = 1.0;
  for_each_pair(free, [&](double o) { best = std::min(best, 1.0 - o); });
  return best;
}

inline double pairwise_average(const std::vector<double>& free) {
  double sum = 0.0;
  int pairs = 0;
  for_each_pair(free, [&](double o) {
    sum += 1.0 - o;
    ++pairs;
  });
  return sum / pairs;
}

}  // namespace objective

inline OptimizationResult maximize_epsilon_d3(double resolution, int jobs = 1) {
  detail::require_resolution(resolution);
  auto r = grid_maximize("eps-d3", {"theta2", "theta3"}, objective::min_pairwise_success,
                         GridOptions{resolution, 3, 10, jobs});
  return r;
}

// eps over the subfamily |0>, |t>, |t + pi/2> where the last two states are orthogonal.
inline OptimizationResult maximize_epsilon_d3_orthogonal(double resolution, int jobs = 1) {
  detail::require_resolution(resolution);
  auto f = [](const std::vector<double>& x) {
    return objective::min_pairwise_success({x[0], x[0] + std::numbers::pi / 2.0});
  };
  return grid_maximize("eps-d3-orthogonal", {"theta2"}, f, GridOptions{resolution, 3, 10, jobs});
}

// Maximizes the three-value average subject to every pair succeeding with
// probability at least eps. Infeasible points score -1 - violation so that
// refinement is steered back toward the feasible region.
inline OptimizationResult maximize_avg_given_epsilon(double eps, double resolution, int jobs = 1) {
  detail::require_resolution(resolution);
  if (!(eps > 0.0)) throw InvalidParameterError("eps must be positive");
  if (eps > 0.5) throw InfeasibleError("no three qubit states have every pair success above 1/2");
  auto f = [eps](const std::vector<double>& x) {
    const double worst = objective::min_pairwise_success(x);
    if (worst < eps) return -1.0 - (eps - worst);
    return objective::pairwise_average(x);
  };
  auto r = grid_maximize("avg-given-eps", {"theta2", "theta3"}, f,
                         GridOptions{resolution, 3, 10, jobs});
  if (r.best_value < 0.0) {
    throw InfeasibleError("no feasible encoding found at this resolution");
  }
  r.diagnostics["eps"] = eps;
  r.diagnostics["closed_form"] = (2.0 + eps - std::sqrt(2.0 * eps - eps * eps)) / 3.0;
  return r;
}

inline OptimizationResult maximize_epsilon_d4(double resolution, int jobs = 1) {
  detail::require_resolution(resolution);
  return grid_maximize("eps-d4", {"theta2", "theta3", "theta4"}, objective::min_pairwise_success,
                       GridOptions{resolution, 3, 10, jobs});
}

// Unconstrained maximum of the three-value average. Afterwards every coarse
// grid point within 1e-3 of the optimum is inspected: diagnostics record how
// many there are, how many have every pair succeeding with probability at
// least 1e-3, and how many pass wins_quantum. Both of the latter should be 0.
inline OptimizationResult verify_average_sup(double resolution, int jobs = 1) {
  detail::require_resolution(resolution);
  auto r = grid_maximize("average-sup", {"theta2", "theta3"}, objective::pairwise_average,
                         GridOptions{resolution, 3, 10, jobs});
  const GameSpec spec = GameSpec::make(3, 2);
  const double step = resolution * std::numbers::pi;
  const int count = grid_points(resolution);
  std::int64_t near = 0;
  std::int64_t independent = 0;
  std::int64_t winning = 0;
  for (int i = 0; i < count; ++i) {
    for (int k = 0; k < count; ++k) {
      const std::vector<double> x{i * step, k * step};
      if (objective::pairwise_average(x) < r.best_value - 1e-3) continue;
      ++near;
      if (objective::min_pairwise_success(x) >= 1e-3) ++independent;
      if (wins_quantum(spec, QuantumStrategy{real_qubit_states(x), PerEvent{}, {}})) ++winning;
    }
  }
  r.diagnostics["near_optimal_points"] = static_cast<double>(near);
  r.diagnostics["near_optimal_pairwise_independent"] = static_cast<double>(independent);
  r.diagnostics["near_optimal_winning"] = static_cast<double>(winning);
  return r;
}

// Re-evaluates a result through the state route (explicit inner products).
inline double reevaluate(const OptimizationResult& r) {
  std::vector<double> angles = r.best_parameters;
  if (r.objective_name == "eps-d3-orthogonal") angles.push_back(angles[0] + std::numbers::pi / 2.0);
  const auto states = real_qubit_states(angles);
  if (r.objective_name == "average-sup" || r.objective_name == "avg-given-eps") {
    return pairwise_average(states);
  }
  return min_pairwise_success(states);
}

}  // namespace qident

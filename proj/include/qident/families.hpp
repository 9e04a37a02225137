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

// Named encoding families with their closed-form success figures.
//
// Qubit families use |phi> = |0> and |phi_perp> = |1>. Expected reports list
// events in lexicographic order ({0,1}, {0,2}, {1,2}, ...).

#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qident/game.hpp"
#include "qident/usd.hpp"

namespace qident {

struct FamilyInstance {
  std::string name;
  std::map<std::string, double> parameters;
  std::vector<PureState> states;
  std::optional<SuccessReport> expected;

  int values() const { return static_cast<int>(states.size()); }
  int message_dim() const { return states.empty() ? 0 : states.front().dim(); }

  GameSpec game() const { return GameSpec::make(values(), message_dim()); }

  QuantumStrategy strategy() const { return QuantumStrategy{states, PerEvent{}, name}; }
};

namespace detail {

inline PureState qubit(Complex a, Complex b) { return PureState{a, b}; }

inline void require_epsilon(double eps) {
  const double cap = 1.0 - 1.0 / std::numbers::sqrt2;
  if (!(eps > 0.0) || eps > cap + 1e-12) {
    throw InvalidParameterError("eps must lie in (0, 1 - 1/sqrt(2)]");
  }
}

}  // namespace detail

// |phi1> = |0>, |phi2> = a|0> + b|1>, |phi3> = a1|1> + a2(b*|0> - a*|1>).
inline FamilyInstance complement_family(Complex a, Complex b, Complex a1, Complex a2) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol::kState) {
    throw InvalidParameterError("|a|^2 + |b|^2 must equal 1");
  }
  const Complex c0 = a2 * std::conj(b);
  const Complex c1 = a1 - a2 * std::conj(a);
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > tol::kState) {
    throw InvalidParameterError("(a1, a2) do not give a normalized third state");
  }
  FamilyInstance f;
  f.name = "complement";
  f.parameters = {{"|a|", std::abs(a)}, {"|b|", std::abs(b)}, {"|a1|", std::abs(a1)},
                  {"|a2|", std::abs(a2)}};
  f.states = {PureState::basis(2, 0), detail::qubit(a, b), detail::qubit(c0, c1)};
  return f;
}

// |0>, (1-eps)|0> + sqrt(2eps - eps^2)|1>, |1>.
inline FamilyInstance eps_floor_d3(double eps) {
  detail::require_epsilon(eps);
  const double s = std::sqrt(2.0 * eps - eps * eps);
  FamilyInstance f;
  f.name = "eps-floor-d3";
  f.parameters = {{"eps", eps}};
  f.states = {PureState::basis(2, 0), detail::qubit(1.0 - eps, s), PureState::basis(2, 1)};
  f.expected = SuccessReport::from_events({eps, 1.0, 1.0 - s});
  return f;
}

inline FamilyInstance trine_states() {
  const double h = std::numbers::sqrt3 / 2.0;
  FamilyInstance f;
  f.name = "trine";
  f.states = {PureState::basis(2, 0), detail::qubit(0.5, h), detail::qubit(0.5, -h)};
  f.expected = SuccessReport::from_events({0.5, 0.5, 0.5});
  return f;
}

// Trine strategy where Bob always performs the elimination measurement.
inline QuantumStrategy trine_fixed_strategy() {
  const FamilyInstance f = trine_states();
  return QuantumStrategy{f.states, Fixed{elimination_povm(f.states).povm}, "trine-fixed"};
}

// |0>, a|0> + b|1>, a|0> - b|1> with a^2 = 1/2 - delta, b^2 = 1/2 + delta.
inline FamilyInstance trine_family(double delta) {
  if (!(delta > 0.0) || !(delta < 0.5)) throw InvalidParameterError("delta must lie in (0, 1/2)");
  const double a = std::sqrt(0.5 - delta);
  const double b = std::sqrt(0.5 + delta);
  FamilyInstance f;
  f.name = "trine-delta";
  f.parameters = {{"delta", delta}};
  f.states = {PureState::basis(2, 0), detail::qubit(a, b), detail::qubit(a, -b)};
  f.expected = SuccessReport::from_events({1.0 - a, 1.0 - a, 1.0 - 2.0 * delta});
  return f;
}

// Adds sqrt(2eps - eps^2)|0> - (1-eps)|1> to the eps_floor_d3 states.
inline FamilyInstance eps_floor_d4(double eps) {
  detail::require_epsilon(eps);
  const double c = 1.0 - eps;
  const double s = std::sqrt(2.0 * eps - eps * eps);
  FamilyInstance f;
  f.name = "eps-floor-d4";
  f.parameters = {{"eps", eps}};
  f.states = {PureState::basis(2, 0), detail::qubit(c, s), PureState::basis(2, 1),
              detail::qubit(s, -c)};
  // pairs 01 02 03 12 13 23 have overlaps c 0 s s 0 c
  f.expected = SuccessReport::from_events({eps, 1.0, 1.0 - s, 1.0 - s, 1.0, eps});
  return f;
}

// |0>, |+>, |1>, |->: the computational and Hadamard bases interleaved.
inline FamilyInstance mub_states_d4() {
  const double r = 1.0 / std::numbers::sqrt2;
  FamilyInstance f;
  f.name = "mub-d4";
  f.states = {PureState::basis(2, 0), detail::qubit(r, r), PureState::basis(2, 1),
              detail::qubit(r, -r)};
  const double e = 1.0 - r;
  f.expected = SuccessReport::from_events({e, 1.0, e, e, 1.0, e});
  return f;
}

inline std::pair<Basis, Basis> mub_bases_d4() {
  const FamilyInstance f = mub_states_d4();
  return {Basis({f.states[0], f.states[2]}), Basis({f.states[1], f.states[3]})};
}

// x_i -> cos(theta_i)|0> + sin(theta_i)|1>, theta_i = i*pi/(2(d+1)), i = 1..d.
// All amplitudes are positive and distinct, so every pair is independent.
inline FamilyInstance large_d_encoding(int d) {
  if (d < 2) throw InvalidParameterError("large_d_encoding needs d >= 2");
  const double step = std::numbers::pi / (2.0 * (d + 1));
  FamilyInstance f;
  f.name = "large-d";
  f.parameters = {{"d", static_cast<double>(d)}};
  for (int i = 1; i <= d; ++i) f.states.push_back(PureState::real_qubit(i * step));
  std::vector<double> per_event;
  for (int i = 1; i <= d; ++i) {
    for (int k = i + 1; k <= d; ++k) per_event.push_back(1.0 - std::cos((k - i) * step));
  }
  f.expected = SuccessReport::from_events(std::move(per_event));
  return f;
}

// |0>, |1>, |2>, (|0> + |1> + |2>)/sqrt(3) on the (4,3) game. Each event with
// the fourth state has Gram eigenvalues {1, 1 +- sqrt(2/3)}, so reciprocal
// discrimination succeeds with probability 1 - sqrt(2/3) there.
inline FamilyInstance qutrit_d4_encoding() {
  FamilyInstance f;
  f.name = "qutrit-d4";
  f.states = {PureState::basis(3, 0), PureState::basis(3, 1), PureState::basis(3, 2),
              PureState{1.0, 1.0, 1.0}};
  const double l = 1.0 - std::sqrt(2.0 / 3.0);
  f.expected = SuccessReport::from_events({1.0, l, l, l});
  return f;
}

// |0>, |1>, |+>: the simplest winning qubit strategy for (3,2).
inline FamilyInstance basis_plus_states() {
  const double r = 1.0 / std::numbers::sqrt2;
  FamilyInstance f;
  f.name = "basis-plus";
  f.states = {PureState::basis(2, 0), PureState::basis(2, 1), detail::qubit(r, r)};
  f.expected = SuccessReport::from_events({1.0, 1.0 - r, 1.0 - r});
  return f;
}

// Exploration only: the d=4 MUB states extended by the sigma_y eigenvectors
// (|0> +- i|1>)/sqrt(2). No optimum is claimed, so no expected report.
inline FamilyInstance sigma_y_extension(int d) {
  if (d != 5 && d != 6) throw InvalidParameterError("sigma_y extension is defined for d = 5, 6");
  const double r = 1.0 / std::numbers::sqrt2;
  FamilyInstance f = mub_states_d4();
  f.name = "sigma-y";
  f.parameters = {{"d", static_cast<double>(d)}};
  f.expected.reset();
  f.states.push_back(detail::qubit(r, Complex(0.0, r)));
  if (d == 6) f.states.push_back(detail::qubit(r, Complex(0.0, -r)));
  return f;
}

}  // namespace qident

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

// Unambiguous discrimination measurements for pure states with equal priors.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qident/qcore.hpp"

namespace qident {

// How a conclusive outcome is read.
//   identifies: outcome i means "the state is state i".
//   eliminates: outcome i means "the state is not state i".
enum class OutcomeRule { identifies, eliminates };

// Conclusive elements (one per outcome) plus the inconclusive completion.
struct Povm {
  std::vector<Matrix> elements;
  Matrix inconclusive;
  OutcomeRule rule = OutcomeRule::identifies;

  int dim() const { return static_cast<int>(inconclusive.rows()); }
  int outcomes() const { return static_cast<int>(elements.size()); }
};

struct UsdResult {
  Povm povm;
  std::vector<double> success_per_state;
  double average_success = 0.0;
  // Uniform scale applied to the rank-one conclusive elements.
  double scale = 1.0;
};

inline double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline double max_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline bool is_psd(const Matrix& m, double tolerance = tol::kState) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tolerance) return false;
  return min_eigenvalue(m) >= -tolerance;
}

// <s|E|s>
inline double born(const Matrix& element, const PureState& s) {
  return (s.amplitudes().adjoint() * element * s.amplitudes())(0, 0).real();
}

// Outcome probabilities for state s; the last entry is the inconclusive one.
inline std::vector<double> outcome_probabilities(const Povm& povm, const PureState& s) {
  if (s.dim() != povm.dim()) throw DimensionError("state and POVM dimensions differ");
  std::vector<double> probs;
  probs.reserve(povm.elements.size() + 1);
  for (const Matrix& e : povm.elements) probs.push_back(std::max(0.0, born(e, s)));
  probs.push_back(std::max(0.0, born(povm.inconclusive, s)));
  return probs;
}

inline bool validate_povm(const Povm& p) {
  const int dim = p.dim();
  if (dim == 0 || p.inconclusive.cols() != dim) return false;
  Matrix total = p.inconclusive;
  if (!is_psd(p.inconclusive)) return false;
  for (const Matrix& e : p.elements) {
    if (e.rows() != dim || e.cols() != dim) return false;
    if (!is_psd(e)) return false;
    total += e;
  }
  return (total - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <= tol::kState;
}

namespace detail {

inline Povm complete(std::vector<Matrix> elements, OutcomeRule rule, int dim) {
  Matrix rest = Matrix::Identity(dim, dim);
  for (const Matrix& e : elements) rest -= e;
  rest = (rest + rest.adjoint()) / 2.0;
  return Povm{std::move(elements), std::move(rest), rule};
}

inline double mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

}  // namespace detail

// Optimal equal-prior discrimination of two pure states. Element i projects
// onto the direction inside span{s1, s2} orthogonal to the other state and is
// scaled by 1/(1+|<s1|s2>|), so each state is identified with probability
// 1 - |<s1|s2>|.
inline UsdResult usd_two_states(const PureState& s1, const PureState& s2) {
  const Complex o = overlap(s1, s2);
  const double mod = std::abs(o);
  if (mod >= 1.0 - tol::kState) {
    throw UnambiguousImpossibleError("two linearly dependent states cannot be discriminated");
  }
  const Vector& a = s1.amplitudes();
  const Vector& b = s2.amplitudes();
  Vector perp_to_b = a - b * b.dot(a);
  Vector perp_to_a = b - a * a.dot(b);
  perp_to_b.normalize();
  perp_to_a.normalize();
  const double scale = 1.0 / (1.0 + mod);
  std::vector<Matrix> elements{scale * perp_to_b * perp_to_b.adjoint(),
                               scale * perp_to_a * perp_to_a.adjoint()};
  UsdResult r;
  r.povm = detail::complete(std::move(elements), OutcomeRule::identifies, s1.dim());
  r.success_per_state = {born(r.povm.elements[0], s1), born(r.povm.elements[1], s2)};
  r.average_success = detail::mean(r.success_per_state);
  r.scale = scale;
  return r;
}

// State elimination for three pairwise independent qubit states. Outcome i
// projects onto the complement of state i and so never fires on state i.
// The common scale is the largest one for which the completion stays PSD,
// i.e. 1 / lambda_max(sum of complement projectors).
//
// success_per_state[i] is the probability that state i is identified when it
// is paired with one of the other two states, averaged over both partners.
inline UsdResult elimination_povm(std::span<const PureState> states) {
  if (states.size() != 3) throw InvalidEnsembleError("elimination needs exactly three states");
  for (const PureState& s : states) {
    if (s.dim() != 2) throw InvalidEnsembleError("elimination is defined for qubit states");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = i + 1; k < 3; ++k) {
      const PureState pair[] = {states[i], states[k]};
      if (!is_linearly_independent(pair)) {
        throw InvalidEnsembleError("elimination ensemble has a dependent pair");
      }
    }
  }
  Matrix sum = Matrix::Zero(2, 2);
  std::vector<Matrix> complements;
  for (const PureState& s : states) {
    complements.push_back(projector(qubit_complement(s)));
    sum += complements.back();
  }
  const double scale = 1.0 / max_eigenvalue(sum);
  for (Matrix& e : complements) e *= scale;

  UsdResult r;
  r.povm = detail::complete(std::move(complements), OutcomeRule::eliminates, 2);
  r.scale = scale;
  for (std::size_t i = 0; i < 3; ++i) {
    double identified = 0.0;
    for (std::size_t partner = 0; partner < 3; ++partner) {
      if (partner == i) continue;
      identified += born(r.povm.elements[partner], states[i]);
    }
    r.success_per_state.push_back(identified / 2.0);
  }
  r.average_success = detail::mean(r.success_per_state);
  return r;
}

// Reciprocal-basis discrimination of n linearly independent states (n <= D).
// With Phi the D x n column matrix and G its Gram matrix, the dual vectors
// chi = Phi G^{-1} satisfy <chi_i|phi_k> = delta_ik. Element i is c |chi_i><chi_i|
// with the largest c keeping the completion PSD, which is lambda_min(G).
// Every state is therefore identified with the same probability c.
inline UsdResult usd_reciprocal(std::span<const PureState> states) {
  const int dim = common_dim(states);
  if (!is_linearly_independent(states)) {
    throw UnambiguousImpossibleError("linearly dependent states cannot be discriminated");
  }
  const Matrix phi = column_matrix(states);
  const Matrix g = phi.adjoint() * phi;
  const Matrix chi = phi * g.inverse();
  const double scale = min_eigenvalue(g);
  std::vector<Matrix> elements;
  for (Eigen::Index i = 0; i < chi.cols(); ++i) {
    elements.push_back(scale * chi.col(i) * chi.col(i).adjoint());
  }
  UsdResult r;
  r.povm = detail::complete(std::move(elements), OutcomeRule::identifies, dim);
  r.scale = scale;
  for (std::size_t i = 0; i < states.size(); ++i) {
    r.success_per_state.push_back(born(r.povm.elements[i], states[i]));
  }
  r.average_success = detail::mean(r.success_per_state);
  return r;
}

}  // namespace qident

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

// Pure-state primitives: normalized amplitude vectors, overlaps, Gram
// matrices, numerical rank, coherence rank and mutual unbiasedness.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qident/errors.hpp"

namespace qident {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

namespace tol {
// Normalization, orthogonality, PSD and completeness checks.
inline constexpr double kState = 1e-9;
// Smallest-singular-value threshold for linear independence.
inline constexpr double kRank = 1e-7;
}  // namespace tol

// A normalized amplitude vector with canonical global phase: the first
// amplitude whose modulus exceeds tol::kState is real and positive.
//
// Construction normalizes its input, so callers may pass unnormalized
// superpositions such as (1, 1, 1). A zero vector is rejected.
class PureState {
 public:
  explicit PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw EmptyInputError("state with no amplitudes");
    const double norm = amps_.norm();
    if (!(norm > 1e-12) || !std::isfinite(norm)) {
      throw InvalidParameterError("cannot normalize a zero or non-finite amplitude vector");
    }
    amps_ /= norm;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      const double mod = std::abs(amps_[i]);
      if (mod > tol::kState) {
        amps_ *= std::conj(amps_[i]) / mod;
        amps_[i] = Complex(mod, 0.0);
        break;
      }
    }
  }

  PureState(std::initializer_list<Complex> amplitudes)
      : PureState(to_vector(amplitudes)) {}

  // Computational basis state |k> of dimension `dim`.
  static PureState basis(int dim, int k) {
    if (dim < 1 || k < 0 || k >= dim) {
      throw DimensionError("basis index " + std::to_string(k) + " outside dimension " +
                           std::to_string(dim));
    }
    Vector v = Vector::Zero(dim);
    v[k] = 1.0;
    return PureState(std::move(v));
  }

  // cos(theta)|0> + sin(theta)|1>.
  static PureState real_qubit(double theta) {
    Vector v(2);
    v << std::cos(theta), std::sin(theta);
    return PureState(std::move(v));
  }

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_[i]; }

  // Entrywise equality of canonical amplitudes, i.e. equality up to global phase.
  bool approx_equal(const PureState& other, double tolerance = tol::kState) const {
    return dim() == other.dim() && (amps_ - other.amps_).cwiseAbs().maxCoeff() <= tolerance;
  }

 private:
  static Vector to_vector(std::initializer_list<Complex> amplitudes) {
    Vector v(static_cast<Eigen::Index>(amplitudes.size()));
    Eigen::Index i = 0;
    for (const Complex& a : amplitudes) v[i++] = a;
    return v;
  }

  Vector amps_;
};

inline void require_same_dim(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

inline int common_dim(std::span<const PureState> states) {
  if (states.empty()) throw EmptyInputError("empty state sequence");
  const int dim = states.front().dim();
  for (const PureState& s : states) require_same_dim(states.front(), s);
  return dim;
}

// <s1|s2>
inline Complex overlap(const PureState& s1, const PureState& s2) {
  require_same_dim(s1, s2);
  return s1.amplitudes().dot(s2.amplitudes());
}

// Matrix whose columns are the amplitude vectors.
inline Matrix column_matrix(std::span<const PureState> states) {
  const int dim = common_dim(states);
  Matrix m(dim, static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = states[k].amplitudes();
  }
  return m;
}

inline Matrix gram(std::span<const PureState> states) {
  const Matrix cols = column_matrix(states);
  return cols.adjoint() * cols;
}

inline double smallest_singular_value(std::span<const PureState> states) {
  const Matrix cols = column_matrix(states);
  if (cols.cols() > cols.rows()) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(cols);
  return svd.singularValues().minCoeff();
}

inline bool is_linearly_independent(std::span<const PureState> states,
                                    double tolerance = tol::kRank) {
  return smallest_singular_value(states) > tolerance;
}

inline Matrix projector(const PureState& s) {
  return s.amplitudes() * s.amplitudes().adjoint();
}

inline PureState apply(const Matrix& unitary, const PureState& s) {
  if (unitary.cols() != s.dim()) throw DimensionError("operator does not act on this state");
  return PureState(unitary * s.amplitudes());
}

// The qubit state orthogonal to s: (a, b) -> (-b*, a*).
inline PureState qubit_complement(const PureState& s) {
  if (s.dim() != 2) throw DimensionError("qubit complement needs a dimension-2 state");
  Vector v(2);
  v << -std::conj(s[1]), std::conj(s[0]);
  return PureState(std::move(v));
}

// An orthonormal basis of C^D.
class Basis {
 public:
  explicit Basis(std::vector<PureState> states) : states_(std::move(states)) {
    const int dim = common_dim(states_);
    if (static_cast<int>(states_.size()) != dim) {
      throw InvalidInputError("a basis of dimension " + std::to_string(dim) + " needs " +
                              std::to_string(dim) + " states, got " +
                              std::to_string(states_.size()));
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
      for (std::size_t k = i + 1; k < states_.size(); ++k) {
        if (std::abs(overlap(states_[i], states_[k])) >= tol::kState) {
          throw InvalidInputError("basis states are not orthogonal");
        }
      }
    }
  }

  static Basis computational(int dim) {
    std::vector<PureState> states;
    for (int k = 0; k < dim; ++k) states.push_back(PureState::basis(dim, k));
    return Basis(std::move(states));
  }

  int dim() const { return static_cast<int>(states_.size()); }
  const std::vector<PureState>& states() const { return states_; }
  const PureState& operator[](int i) const { return states_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<PureState> states_;
};

// Number of basis states with non-negligible amplitude in s.
inline int coherence_rank(const PureState& s, const Basis& basis) {
  if (s.dim() != basis.dim()) throw DimensionError("state and basis dimensions differ");
  int rank = 0;
  for (const PureState& b : basis.states()) {
    if (std::abs(overlap(b, s)) > tol::kState) ++rank;
  }
  return rank;
}

inline bool are_mutually_unbiased(const Basis& b1, const Basis& b2,
                                  double tolerance = tol::kState) {
  if (b1.dim() != b2.dim()) throw DimensionError("bases have different dimensions");
  const double target = 1.0 / std::sqrt(static_cast<double>(b1.dim()));
  for (const PureState& u : b1.states()) {
    for (const PureState& v : b2.states()) {
      if (std::abs(std::abs(overlap(u, v)) - target) > tolerance) return false;
    }
  }
  return true;
}

}  // namespace qident

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

// Random inputs shared by the test suites.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qident/qident.hpp"

namespace qident::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex gaussian_complex() {
  std::normal_distribution<double> g;
  return {g(rng()), g(rng())};
}

inline PureState random_state(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = gaussian_complex();
  return PureState(v);
}

inline std::vector<PureState> random_states(int count, int dim) {
  std::vector<PureState> out;
  for (int i = 0; i < count; ++i) out.push_back(random_state(dim));
  return out;
}

// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline Matrix random_unitary(int dim) {
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = gaussian_complex();
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

inline PureState with_phase(const PureState& s, double phi) {
  return PureState(Vector(s.amplitudes() * std::polar(1.0, phi)));
}

// Largest c in [0, hi] such that I - c * sum(elements) stays PSD, by bisection.
inline double bisect_scale(const std::vector<Matrix>& unit_elements, double hi) {
  const int dim = static_cast<int>(unit_elements.front().rows());
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& e : unit_elements) sum += e;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const Matrix rest = Matrix::Identity(dim, dim) - mid * sum;
    (min_eigenvalue(rest) >= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace qident::testing

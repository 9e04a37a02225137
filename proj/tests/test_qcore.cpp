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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"

namespace qident {
namespace {

using testing::random_state;
using testing::random_states;

const double kR = 1.0 / std::numbers::sqrt2;

TEST(PureStateTest, NormalizesAndFixesPhase) {
  const PureState s{Complex(0, 3), Complex(0, 4)};
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_NEAR(s[0].real(), 0.6, 1e-12);
  EXPECT_NEAR(s[0].imag(), 0.0, 1e-12);
  EXPECT_TRUE(s.approx_equal(PureState{0.6, 0.8}));
}

TEST(PureStateTest, ZeroVectorRejected) {
  EXPECT_THROW((PureState{0.0, 0.0}), InvalidParameterError);
  EXPECT_THROW(PureState(Vector(0)), EmptyInputError);
}

TEST(OverlapTest, BasisStates) {
  EXPECT_NEAR(std::abs(overlap(PureState::basis(2, 0), PureState::basis(2, 0))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(overlap(PureState::basis(2, 0), PureState::basis(2, 1))), 0.0, 1e-12);
}

TEST(OverlapTest, TrinePairHasHalfOverlap) {
  const auto t = trine_states().states;
  EXPECT_NEAR(std::abs(overlap(t[0], t[1])), 0.5, 1e-12);
}

TEST(OverlapTest, ConjugateLinearInFirstArgument) {
  const PureState a{1.0, Complex(0, 1)};
  const PureState b = PureState::basis(2, 1);
  // <a|b> = conj(i)/sqrt2
  EXPECT_NEAR(overlap(a, b).imag(), -kR, 1e-12);
}

TEST(OverlapTest, DimensionMismatch) {
  EXPECT_THROW(overlap(PureState::basis(2, 0), PureState::basis(3, 0)), DimensionError);
}

TEST(OverlapTest, CauchySchwarzOnRandomPairs) {
  for (int dim : {2, 3, 5}) {
    for (int i = 0; i < 1000; ++i) {
      const double m = std::abs(overlap(random_state(dim), random_state(dim)));
      EXPECT_GE(m, -1e-9);
      EXPECT_LE(m, 1.0 + 1e-9);
    }
  }
}

TEST(OverlapTest, ModulusIgnoresGlobalPhase) {
  for (int i = 0; i < 200; ++i) {
    const auto a = random_state(3);
    const auto b = random_state(3);
    const PureState a2(Vector(a.amplitudes() * std::polar(1.0, testing::uniform(0, 6.3))));
    EXPECT_NEAR(std::abs(overlap(a, b)), std::abs(overlap(a2, b)), 1e-12);
    EXPECT_TRUE(a.approx_equal(a2));
  }
}

TEST(IndependenceTest, Examples) {
  const std::vector<PureState> ortho{PureState::basis(2, 0), PureState::basis(2, 1)};
  const std::vector<PureState> repeated{PureState::basis(2, 0), PureState::basis(2, 0)};
  const std::vector<PureState> skew{PureState{0.6, 0.8}, PureState{0.8, 0.6}};
  EXPECT_TRUE(is_linearly_independent(ortho));
  EXPECT_FALSE(is_linearly_independent(repeated));
  EXPECT_TRUE(is_linearly_independent(skew));
  EXPECT_THROW(is_linearly_independent(std::vector<PureState>{}), EmptyInputError);
}

TEST(IndependenceTest, TooManyStatesForDimension) {
  EXPECT_FALSE(is_linearly_independent(random_states(3, 2)));
}

// Oracle: rank via the Gram determinant, independent of the SVD route.
TEST(IndependenceTest, AgreesWithGramDeterminantOnSubsets) {
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto pool = random_states(3, dim);
      // Inject exact dependencies now and then.
      if (trial % 4 == 0) pool[2] = pool[0];
      if (trial % 4 == 1) pool[2] = PureState(Vector(pool[0].amplitudes() + pool[1].amplitudes()));
      for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<PureState> subset;
        for (int k = 0; k < 3; ++k) {
          if (mask & (1u << k)) subset.push_back(pool[static_cast<std::size_t>(k)]);
        }
        const double det = std::abs(gram(subset).determinant());
        const bool oracle = det > 1e-10;
        EXPECT_EQ(is_linearly_independent(subset), oracle) << "dim " << dim << " mask " << mask;
      }
    }
  }
}

TEST(GramTest, OrthonormalPairIsIdentity) {
  const std::vector<PureState> ortho{PureState::basis(2, 0), PureState::basis(2, 1)};
  EXPECT_TRUE(gram(ortho).isApprox(Matrix::Identity(2, 2)));
}

TEST(GramTest, TrineOffDiagonals) {
  const Matrix g = gram(trine_states().states);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(std::abs(g(i, k)), i == k ? 1.0 : 0.5, 1e-12);
    }
  }
}

TEST(GramTest, FloorFamilyOffDiagonals) {
  const Matrix g = gram(eps_floor_d3(0.1).states);
  EXPECT_NEAR(std::abs(g(0, 1)), 0.9, 1e-12);
  EXPECT_NEAR(std::abs(g(1, 2)), std::sqrt(0.19), 1e-12);
  EXPECT_NEAR(std::abs(g(0, 2)), 0.0, 1e-12);
}

TEST(GramTest, DimensionMismatch) {
  const std::vector<PureState> bad{PureState::basis(2, 0), PureState::basis(3, 0)};
  EXPECT_THROW(gram(bad), DimensionError);
}

TEST(CoherenceRankTest, Examples) {
  EXPECT_EQ(coherence_rank(PureState::basis(3, 1), Basis::computational(3)), 1);
  EXPECT_EQ(coherence_rank(PureState{1.0, 1.0, 1.0}, Basis::computational(3)), 3);
  EXPECT_EQ(coherence_rank(PureState{kR, kR}, Basis::computational(2)), 2);
  EXPECT_THROW(coherence_rank(PureState::basis(2, 0), Basis::computational(3)), DimensionError);
}

TEST(CoherenceRankTest, RangeAndBasisStateCharacterization) {
  const Basis b = Basis::computational(3);
  for (int i = 0; i < 200; ++i) {
    Vector v = random_state(3).amplitudes();
    if (i % 3 == 0) v[1] = 0.0;
    if (i % 5 == 0) v[2] = 0.0;
    const PureState s(v);
    const int r = coherence_rank(s, b);
    EXPECT_GE(r, 1);
    EXPECT_LE(r, 3);
    bool is_basis = false;
    for (const PureState& e : b.states()) is_basis = is_basis || std::abs(std::abs(overlap(e, s)) - 1.0) < 1e-9;
    EXPECT_EQ(r == 1, is_basis);
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(coherence_rank(PureState::basis(3, k), b), 1);
  }
}

TEST(BasisTest, RejectsBadInput) {
  EXPECT_THROW(Basis({PureState::basis(2, 0)}), InvalidInputError);
  EXPECT_THROW(Basis({PureState::basis(2, 0), PureState{kR, kR}}), InvalidInputError);
}

TEST(MutualUnbiasednessTest, Examples) {
  const Basis z = Basis::computational(2);
  const Basis x({PureState{kR, kR}, PureState{kR, -kR}});
  const Basis tilted({PureState{std::numbers::sqrt3 / 2, 0.5}, PureState{0.5, -std::numbers::sqrt3 / 2}});
  EXPECT_TRUE(are_mutually_unbiased(z, x));
  EXPECT_FALSE(are_mutually_unbiased(z, z));
  EXPECT_FALSE(are_mutually_unbiased(z, tilted));
  EXPECT_THROW(are_mutually_unbiased(z, Basis::computational(3)), DimensionError);
}

TEST(QubitComplementTest, IsOrthogonal) {
  for (int i = 0; i < 100; ++i) {
    const auto s = random_state(2);
    EXPECT_NEAR(std::abs(overlap(s, qubit_complement(s))), 0.0, 1e-12);
  }
  EXPECT_THROW(qubit_complement(PureState::basis(3, 0)), DimensionError);
}

TEST(ApplyTest, UnitaryPreservesOverlaps) {
  const Matrix u = testing::random_unitary(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_state(3);
    const auto b = random_state(3);
    EXPECT_NEAR(std::abs(overlap(apply(u, a), apply(u, b))), std::abs(overlap(a, b)), 1e-12);
  }
}

}  // namespace
}  // namespace qident

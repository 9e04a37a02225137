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
#include <set>
#include <vector>

#include "support.hpp"

namespace qident {
namespace {

bool same_stats(const SimStats& a, const SimStats& b) {
  return a.rounds == b.rounds && a.seed == b.seed && a.per_event_trials == b.per_event_trials &&
         a.per_event_conclusive_correct == b.per_event_conclusive_correct &&
         a.per_event_wrong == b.per_event_wrong &&
         a.per_event_inconclusive == b.per_event_inconclusive &&
         a.conclusive_wrong == b.conclusive_wrong && a.inconclusive == b.inconclusive;
}

TEST(CounterRngTest, UniformRange) {
  CounterRng rng(CounterRng::derive(1, 0));
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 3000; ++i) seen.insert(rng.below(3));
  EXPECT_EQ(seen.size(), 3u);
}

TEST(CounterRngTest, StreamsDiffer) {
  CounterRng a(CounterRng::derive(7, 0));
  CounterRng b(CounterRng::derive(7, 1));
  CounterRng c(CounterRng::derive(8, 0));
  const auto x = a.next();
  EXPECT_NE(x, b.next());
  EXPECT_NE(x, c.next());
}

TEST(SimulationTest, TrineFixedMeasurement) {
  const auto spec = GameSpec::make(3, 2);
  const auto stats = run_rounds(spec, trine_fixed_strategy(), 100000, 7);
  EXPECT_EQ(stats.conclusive_wrong, 0u);
  EXPECT_EQ(stats.rounds, 100000u);
  for (int j = 0; j < 3; ++j) {
    const double n = static_cast<double>(stats.per_event_trials[static_cast<std::size_t>(j)]);
    EXPECT_LE(std::abs(stats.rate(j) - 0.5), 3.0 * std::sqrt(0.25 / n)) << j;
  }
}

TEST(SimulationTest, BasisPlusOrthogonalEventAlwaysSucceeds) {
  const auto f = basis_plus_states();
  const auto stats = run_rounds(f.game(), f.strategy(), 100000, 11);
  EXPECT_EQ(stats.conclusive_wrong, 0u);
  EXPECT_EQ(stats.rate(0), 1.0);
  EXPECT_LE(max_deviation_sigmas(stats, *f.expected), 3.0);
}

TEST(SimulationTest, SameSeedSameStats) {
  const auto f = eps_floor_d4(0.15);
  const auto a = run_rounds(f.game(), f.strategy(), 200000, 99);
  const auto b = run_rounds(f.game(), f.strategy(), 200000, 99);
  EXPECT_TRUE(same_stats(a, b));
  const auto c = run_rounds(f.game(), f.strategy(), 200000, 100);
  EXPECT_FALSE(same_stats(a, c));
}

TEST(SimulationTest, JobsDoNotChangeStats) {
  const auto f = qutrit_d4_encoding();
  const auto one = run_rounds(f.game(), f.strategy(), 300000, 5, 1);
  const auto three = run_rounds(f.game(), f.strategy(), 300000, 5, 3);
  EXPECT_TRUE(same_stats(one, three));
}

TEST(SimulationTest, EveryCbitStrategyFailsSomewhere) {
  // All 8 encodings with every decoder row assignment.
  const auto spec = GameSpec::make(3, 2);
  std::vector<std::vector<Decision>> rows_per_event[3];
  for (int j = 0; j < 3; ++j) {
    const auto& set = spec.set(j);
    const std::vector<Decision> options{std::nullopt, set[0], set[1]};
    for (const auto& a : options) {
      for (const auto& b : options) rows_per_event[j].push_back({a, b});
    }
  }
  int strategies = 0;
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const auto enc = encoding_from_index(idx, 3, 2);
    for (const auto& r0 : rows_per_event[0]) {
      for (const auto& r1 : rows_per_event[1]) {
        for (const auto& r2 : rows_per_event[2]) {
          const ClassicalStrategy s{enc, {r0, r1, r2}, "cbit"};
          const auto stats = run_classical(spec, s, 10000, idx);
          bool failed = stats.conclusive_wrong > 0;
          for (int j = 0; j < 3; ++j) failed = failed || stats.rate(j) < 1.0;
          bool some_event_fails = false;
          for (int j = 0; j < 3; ++j) {
            some_event_fails = some_event_fails ||
                               stats.per_event_wrong[static_cast<std::size_t>(j)] > 0 ||
                               stats.per_event_inconclusive[static_cast<std::size_t>(j)] > 0;
          }
          EXPECT_TRUE(failed && some_event_fails);
          ++strategies;
        }
      }
    }
  }
  EXPECT_EQ(strategies, 8 * 729);
}

TEST(SimulationTest, CanonicalCbitStrategiesZeroOnCollidingEvent) {
  const auto spec = GameSpec::make(3, 2);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const auto s = ClassicalStrategy::with_canonical_decoder(spec, encoding_from_index(idx, 3, 2));
    const auto stats = run_classical(spec, s, 10000, 3);
    EXPECT_EQ(stats.conclusive_wrong, 0u);
    bool zero_event = false;
    for (int j = 0; j < 3; ++j) zero_event = zero_event || stats.rate(j) == 0.0;
    EXPECT_TRUE(zero_event) << idx;
  }
}

TEST(SimulationTest, TrivialGameIdentity) {
  const auto spec = GameSpec::trivial(2);
  const QuantumStrategy q{{PureState::basis(2, 0), PureState::basis(2, 1)}, PerEvent{}, "id"};
  EXPECT_EQ(run_rounds(spec, q, 10000, 1).rate(0), 1.0);
  const auto c = ClassicalStrategy::with_canonical_decoder(spec, {0, 1}, "id");
  EXPECT_EQ(run_classical(spec, c, 10000, 1).rate(0), 1.0);
}

// No ctrit encoding is injective on all four candidate sets: with canonical
// decoding some value is never identified on its colliding event.
TEST(SimulationTest, CtritStrategiesLoseFourThree) {
  const auto spec = GameSpec::make(4, 3);
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    const auto s = ClassicalStrategy::with_canonical_decoder(spec, encoding_from_index(idx, 4, 3));
    ASSERT_FALSE(wins_classical(spec, s));
    const auto stats = run_classical(spec, s, 10000, idx);
    EXPECT_EQ(stats.conclusive_wrong, 0u);
    bool lossy = false;
    for (int j = 0; j < spec.events(); ++j) lossy = lossy || stats.rate(j) < 1.0;
    EXPECT_TRUE(lossy) << idx;
  }
}

TEST(SimulationTest, ZeroErrorAcrossWinningFamilies) {
  std::vector<std::pair<GameSpec, QuantumStrategy>> cases;
  for (const auto& f : {trine_states(), eps_floor_d3(0.1), eps_floor_d4(0.2), mub_states_d4(),
                        large_d_encoding(7), qutrit_d4_encoding(), basis_plus_states(),
                        trine_family(0.1), sigma_y_extension(6)}) {
    cases.emplace_back(f.game(), f.strategy());
  }
  cases.emplace_back(GameSpec::make(3, 2), trine_fixed_strategy());
  std::uint64_t total = 0;
  for (const auto& [spec, strat] : cases) {
    ASSERT_TRUE(wins_quantum(spec, strat)) << strat.name;
    const auto stats = run_rounds(spec, strat, 100000, 42);
    EXPECT_EQ(stats.conclusive_wrong, 0u) << strat.name;
    const auto expected = success_report(spec, strat);
    EXPECT_LE(max_deviation_sigmas(stats, expected), 4.0) << strat.name;
    total += stats.rounds;
  }
  EXPECT_GE(total, 1000000u);
}

TEST(SimulationTest, LosingQuantumStrategyStaysSilent) {
  const QuantumStrategy s{{PureState::basis(2, 0), PureState::basis(2, 0), PureState::basis(2, 1)},
                          PerEvent{}, "repeat"};
  const auto stats = run_rounds(GameSpec::make(3, 2), s, 20000, 1);
  EXPECT_EQ(stats.conclusive_wrong, 0u);
  EXPECT_EQ(stats.rate(0), 0.0);
}

TEST(SimulationTest, Errors) {
  const auto spec = GameSpec::make(3, 2);
  EXPECT_THROW(run_rounds(spec, trine_fixed_strategy(), 0, 1), InvalidParameterError);
  const QuantumStrategy bad{testing::random_states(2, 2), PerEvent{}, {}};
  EXPECT_THROW(run_rounds(spec, bad, 10, 1), StrategyError);
}

}  // namespace
}  // namespace qident

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

// Seeded Monte Carlo rounds of the identification game.
//
// Each round draws x uniformly from {0..d-1}, then j uniformly among the
// events whose candidate set contains x, then samples Bob's outcome from the
// Born probabilities of his measurement for event j.
//
// Rounds are processed in fixed-size batches. Batch b draws from its own
// counter-based stream keyed by (seed, b), so results do not depend on how
// batches are distributed over worker threads.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "qident/game.hpp"

namespace qident {

// SplitMix64 output function applied to key + counter * golden gamma.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Key of sub-stream `stream` of a run seeded with `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix(mix(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  }

  std::uint64_t next() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0..bound-1}, rejection-sampled to avoid modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct SimStats {
  int d = 0;
  int n = 0;
  std::string strategy_name;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> per_event_trials;
  std::vector<std::uint64_t> per_event_conclusive_correct;
  std::vector<std::uint64_t> per_event_wrong;
  std::vector<std::uint64_t> per_event_inconclusive;
  std::uint64_t conclusive_wrong = 0;
  std::uint64_t inconclusive = 0;

  std::uint64_t correct() const {
    std::uint64_t c = 0;
    for (auto v : per_event_conclusive_correct) c += v;
    return c;
  }

  double rate(int j) const {
    const auto t = per_event_trials[static_cast<std::size_t>(j)];
    return t == 0 ? 0.0
                  : static_cast<double>(per_event_conclusive_correct[static_cast<std::size_t>(j)]) /
                        static_cast<double>(t);
  }

  void merge(const SimStats& o) {
    rounds += o.rounds;
    conclusive_wrong += o.conclusive_wrong;
    inconclusive += o.inconclusive;
    for (std::size_t j = 0; j < per_event_trials.size(); ++j) {
      per_event_trials[j] += o.per_event_trials[j];
      per_event_conclusive_correct[j] += o.per_event_conclusive_correct[j];
      per_event_wrong[j] += o.per_event_wrong[j];
      per_event_inconclusive[j] += o.per_event_inconclusive[j];
    }
  }
};

inline constexpr std::uint64_t kSimBatch = 1 << 16;

namespace detail {

inline SimStats empty_stats(const GameSpec& spec, std::string name, std::uint64_t seed) {
  const auto e = static_cast<std::size_t>(spec.events());
  SimStats s;
  s.d = spec.d;
  s.n = spec.n;
  s.strategy_name = std::move(name);
  s.seed = seed;
  s.per_event_trials.assign(e, 0);
  s.per_event_conclusive_correct.assign(e, 0);
  s.per_event_wrong.assign(e, 0);
  s.per_event_inconclusive.assign(e, 0);
  return s;
}

// What Bob concludes in one round: the decided value, or -1 for inconclusive.
template <class Decide>
SimStats run_batched(const GameSpec& spec, std::string name, std::uint64_t rounds,
                     std::uint64_t seed, int jobs, Decide&& decide) {
  if (rounds < 1) throw InvalidParameterError("rounds must be at least 1");
  std::vector<std::vector<int>> containing;
  for (int x = 0; x < spec.d; ++x) containing.push_back(spec.events_containing(x));

  const std::uint64_t batches = (rounds + kSimBatch - 1) / kSimBatch;
  auto run_batch = [&](std::uint64_t b, SimStats& out) {
    CounterRng rng(CounterRng::derive(seed, b));
    const std::uint64_t begin = b * kSimBatch;
    const std::uint64_t end = std::min(rounds, begin + kSimBatch);
    for (std::uint64_t r = begin; r < end; ++r) {
      const auto x = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.d)));
      const auto& evs = containing[static_cast<std::size_t>(x)];
      const int j = evs[static_cast<std::size_t>(rng.below(evs.size()))];
      const int answer = decide(j, x, rng);
      const auto ju = static_cast<std::size_t>(j);
      ++out.rounds;
      ++out.per_event_trials[ju];
      if (answer < 0) {
        ++out.per_event_inconclusive[ju];
        ++out.inconclusive;
      } else if (answer == x) {
        ++out.per_event_conclusive_correct[ju];
      } else {
        ++out.per_event_wrong[ju];
        ++out.conclusive_wrong;
      }
    }
  };

  jobs = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)),
                                                    1, batches));
  std::vector<SimStats> parts(static_cast<std::size_t>(jobs), empty_stats(spec, name, seed));
  auto worker = [&](int w) {
    for (std::uint64_t b = static_cast<std::uint64_t>(w); b < batches;
         b += static_cast<std::uint64_t>(jobs)) {
      run_batch(b, parts[static_cast<std::size_t>(w)]);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  SimStats total = empty_stats(spec, std::move(name), seed);
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace detail

inline SimStats run_rounds(const GameSpec& spec, const QuantumStrategy& strat, std::uint64_t rounds,
                           std::uint64_t seed, int jobs = 1) {
  validate(spec, strat);
  // cumulative[j][x] holds the running sums of outcome probabilities;
  // answer[j][o] the value concluded by outcome o.
  std::vector<std::vector<std::vector<double>>> cumulative(static_cast<std::size_t>(spec.events()));
  std::vector<std::vector<int>> answer(static_cast<std::size_t>(spec.events()));
  for (int j = 0; j < spec.events(); ++j) {
    const EventChannel ch = event_channel(spec, strat, j);
    auto& cum = cumulative[static_cast<std::size_t>(j)];
    cum.resize(static_cast<std::size_t>(spec.d));
    for (int x : spec.set(j)) {
      const auto probs = outcome_probabilities(ch.povm, strat.encoding[static_cast<std::size_t>(x)]);
      double acc = 0.0;
      for (std::size_t o = 0; o + 1 < probs.size(); ++o) {
        acc += probs[o];
        cum[static_cast<std::size_t>(x)].push_back(acc);
      }
    }
    for (const Decision& d : ch.conclusion) answer[static_cast<std::size_t>(j)].push_back(d ? *d : -1);
  }
  return detail::run_batched(spec, strat.name, rounds, seed, jobs,
                             [&](int j, int x, CounterRng& rng) {
                               const auto& cum = cumulative[static_cast<std::size_t>(j)]
                                                           [static_cast<std::size_t>(x)];
                               const double u = rng.uniform();
                               for (std::size_t o = 0; o < cum.size(); ++o) {
                                 if (u < cum[o]) return answer[static_cast<std::size_t>(j)][o];
                               }
                               return -1;
                             });
}

inline SimStats run_classical(const GameSpec& spec, const ClassicalStrategy& strat,
                              std::uint64_t rounds, std::uint64_t seed, int jobs = 1) {
  validate(spec, strat);
  return detail::run_batched(
      spec, strat.name, rounds, seed, jobs, [&](int j, int x, CounterRng&) {
        const int m = strat.encoding[static_cast<std::size_t>(x)];
        const Decision& d = strat.decoder[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
        return d ? *d : -1;
      });
}

// Largest |rate_j - p_j| / sigma_j over events, sigma_j the binomial standard
// error of the expected rate. An event whose expected rate is exactly 0 or 1
// contributes infinity on any mismatch and 0 otherwise.
inline double max_deviation_sigmas(const SimStats& stats, const SuccessReport& expected) {
  double worst = 0.0;
  for (std::size_t j = 0; j < expected.per_event.size(); ++j) {
    const double trials = static_cast<double>(stats.per_event_trials[j]);
    if (trials == 0) continue;
    const double p = expected.per_event[j];
    const double rate = stats.rate(static_cast<int>(j));
    const double sigma = std::sqrt(std::max(p * (1.0 - p), 0.0) / trials);
    if (sigma < 1e-12) {
      if (std::abs(rate - p) > 1e-9) return std::numeric_limits<double>::infinity();
      continue;
    }
    worst = std::max(worst, std::abs(rate - p) / sigma);
  }
  return worst;
}

}  // namespace qident

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

// The (d, n) identification game.
//
// A referee hands Alice a value x in {0..d-1} and hands Bob the index j of a
// candidate set S_j (an n-subset containing x). Alice sends one n-level message
// (classical symbol or pure state); Bob must name x without error with nonzero
// probability for every j. Values are 0-based throughout the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qident/qcore.hpp"
#include "qident/usd.hpp"

namespace qident {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All n-subsets of {0..d-1} in lexicographic order.
inline std::vector<std::vector<int>> enumerate_sets(int d, int n) {
  if (n < 2 || n >= d) {
    throw InvalidGameError("need 2 <= n < d, got d=" + std::to_string(d) +
                           " n=" + std::to_string(n));
  }
  std::vector<std::vector<int>> sets;
  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    sets.push_back(current);
    int pos = n - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == d - n + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < n; ++k) {
      current[static_cast<std::size_t>(k)] = current[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return sets;
}

struct GameSpec {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> sets;

  static GameSpec make(int d, int n) { return GameSpec{d, n, enumerate_sets(d, n)}; }

  // The n = d baseline with a single event containing every value. It is not a
  // proper game instance (Bob can always win) and exists as a sanity anchor.
  static GameSpec trivial(int d) {
    if (d < 2) throw InvalidGameError("trivial game needs d >= 2");
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) all[static_cast<std::size_t>(i)] = i;
    return GameSpec{d, d, {all}};
  }

  int events() const { return static_cast<int>(sets.size()); }
  const std::vector<int>& set(int j) const { return sets[static_cast<std::size_t>(j)]; }

  bool contains(int j, int value) const {
    const auto& s = set(j);
    return std::find(s.begin(), s.end(), value) != s.end();
  }

  std::vector<int> events_containing(int value) const {
    std::vector<int> out;
    for (int j = 0; j < events(); ++j) {
      if (contains(j, value)) out.push_back(j);
    }
    return out;
  }
};

// Bob re-chooses his measurement after learning j.
struct PerEvent {};
// Bob uses one measurement for every event.
struct Fixed {
  Povm povm;
};
using Measurement = std::variant<PerEvent, Fixed>;

struct QuantumStrategy {
  std::vector<PureState> encoding;
  Measurement measurement = PerEvent{};
  std::string name;

  bool is_fixed() const { return std::holds_alternative<Fixed>(measurement); }
};

// nullopt is the inconclusive answer.
using Decision = std::optional<int>;

struct ClassicalStrategy {
  std::vector<int> encoding;                     // value -> message
  std::vector<std::vector<Decision>> decoder;    // [event][message] -> value
  std::string name;

  // Decoder that answers x whenever x is the only member of S_j carrying the
  // received message, and is inconclusive otherwise.
  static ClassicalStrategy with_canonical_decoder(const GameSpec& spec, std::vector<int> encoding,
                                                  std::string name = {}) {
    ClassicalStrategy s{std::move(encoding), {}, std::move(name)};
    for (const auto& set : spec.sets) {
      std::vector<Decision> row(static_cast<std::size_t>(spec.n));
      std::vector<int> hits(static_cast<std::size_t>(spec.n), 0);
      for (int x : set) {
        const int m = s.encoding.at(static_cast<std::size_t>(x));
        if (m < 0 || m >= spec.n) continue;
        ++hits[static_cast<std::size_t>(m)];
        row[static_cast<std::size_t>(m)] = x;
      }
      for (int m = 0; m < spec.n; ++m) {
        if (hits[static_cast<std::size_t>(m)] != 1) row[static_cast<std::size_t>(m)].reset();
      }
      s.decoder.push_back(std::move(row));
    }
    return s;
  }
};

struct SuccessReport {
  std::vector<double> per_event;
  double average = 0.0;
  double epsilon = 0.0;

  static SuccessReport from_events(std::vector<double> per_event) {
    SuccessReport r;
    r.per_event = std::move(per_event);
    if (!r.per_event.empty()) {
      double sum = 0.0;
      for (double p : r.per_event) sum += p;
      r.average = sum / static_cast<double>(r.per_event.size());
      r.epsilon = *std::min_element(r.per_event.begin(), r.per_event.end());
    }
    return r;
  }
};

inline void validate(const GameSpec& spec, const QuantumStrategy& strat) {
  if (static_cast<int>(strat.encoding.size()) != spec.d) {
    throw StrategyError("quantum encoding must assign a state to each of the " +
                        std::to_string(spec.d) + " values");
  }
  for (const PureState& s : strat.encoding) {
    if (s.dim() != spec.n) {
      throw StrategyError("encoded states must have dimension n=" + std::to_string(spec.n));
    }
  }
  if (const auto* fixed = std::get_if<Fixed>(&strat.measurement)) {
    if (spec.d != 3 || spec.n != 2) {
      throw UnsupportedError("a fixed measurement is only supported for the (3,2) game");
    }
    if (fixed->povm.outcomes() != spec.d || fixed->povm.dim() != spec.n ||
        !validate_povm(fixed->povm)) {
      throw StrategyError("fixed measurement is not a valid POVM with one outcome per value");
    }
  }
}

inline void validate(const GameSpec& spec, const ClassicalStrategy& strat) {
  if (static_cast<int>(strat.encoding.size()) != spec.d) {
    throw StrategyError("classical encoding must assign a message to each value");
  }
  for (int m : strat.encoding) {
    if (m < 0 || m >= spec.n) throw StrategyError("message outside {0..n-1}");
  }
  if (static_cast<int>(strat.decoder.size()) != spec.events()) {
    throw StrategyError("decoder must have one row per event");
  }
  for (int j = 0; j < spec.events(); ++j) {
    const auto& row = strat.decoder[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) != spec.n) {
      throw StrategyError("decoder row must cover every message");
    }
    for (const Decision& dec : row) {
      if (dec && !spec.contains(j, *dec)) {
        throw StrategyError("decoder names a value outside its candidate set");
      }
    }
  }
}

// Bob's measurement for one event together with what each outcome concludes.
struct EventChannel {
  Povm povm;
  std::vector<Decision> conclusion;  // per conclusive outcome
};

inline std::vector<PureState> states_of(const QuantumStrategy& strat, const std::vector<int>& set) {
  std::vector<PureState> out;
  for (int x : set) out.push_back(strat.encoding[static_cast<std::size_t>(x)]);
  return out;
}

inline EventChannel event_channel(const GameSpec& spec, const QuantumStrategy& strat, int j) {
  const auto& set = spec.set(j);
  if (const auto* fixed = std::get_if<Fixed>(&strat.measurement)) {
    EventChannel ch{fixed->povm, {}};
    for (int o = 0; o < fixed->povm.outcomes(); ++o) {
      if (fixed->povm.rule == OutcomeRule::identifies) {
        ch.conclusion.push_back(spec.contains(j, o) ? Decision(o) : std::nullopt);
      } else {
        // Eliminating one member of a pair leaves the other.
        Decision d;
        if (set.size() == 2 && spec.contains(j, o)) d = set[0] == o ? set[1] : set[0];
        ch.conclusion.push_back(d);
      }
    }
    return ch;
  }
  const auto states = states_of(strat, set);
  if (!is_linearly_independent(states)) {
    // No conclusive outcome can be error-free; Bob always answers inconclusive.
    const int dim = states.front().dim();
    return EventChannel{Povm{std::vector<Matrix>(set.size(), Matrix::Zero(dim, dim)),
                             Matrix::Identity(dim, dim), OutcomeRule::identifies},
                        std::vector<Decision>(set.begin(), set.end())};
  }
  UsdResult usd = set.size() == 2 ? usd_two_states(states[0], states[1]) : usd_reciprocal(states);
  EventChannel ch{std::move(usd.povm), {}};
  for (int x : set) ch.conclusion.push_back(x);
  return ch;
}

struct OutcomeSplit {
  double correct = 0.0;
  double wrong = 0.0;
  double inconclusive = 0.0;
};

inline OutcomeSplit classify(const EventChannel& ch, const PureState& state, int value) {
  const auto probs = outcome_probabilities(ch.povm, state);
  OutcomeSplit split;
  for (std::size_t o = 0; o < ch.conclusion.size(); ++o) {
    if (!ch.conclusion[o]) {
      split.inconclusive += probs[o];
    } else if (*ch.conclusion[o] == value) {
      split.correct += probs[o];
    } else {
      split.wrong += probs[o];
    }
  }
  split.inconclusive += probs.back();
  return split;
}

inline bool wins_quantum(const GameSpec& spec, const QuantumStrategy& strat) {
  validate(spec, strat);
  if (!strat.is_fixed()) {
    for (const auto& set : spec.sets) {
      if (!is_linearly_independent(states_of(strat, set))) return false;
    }
    return true;
  }
  for (int j = 0; j < spec.events(); ++j) {
    const EventChannel ch = event_channel(spec, strat, j);
    for (int x : spec.set(j)) {
      const OutcomeSplit split = classify(ch, strat.encoding[static_cast<std::size_t>(x)], x);
      if (split.correct <= tol::kState || split.wrong >= tol::kState) return false;
    }
  }
  return true;
}

// Deterministic strategies win only with certainty: Bob must decode every
// value of every candidate set.
inline bool wins_classical(const GameSpec& spec, const ClassicalStrategy& strat) {
  validate(spec, strat);
  for (int j = 0; j < spec.events(); ++j) {
    const auto& row = strat.decoder[static_cast<std::size_t>(j)];
    for (int x : spec.set(j)) {
      const Decision& dec = row[static_cast<std::size_t>(strat.encoding[static_cast<std::size_t>(x)])];
      if (!dec || *dec != x) return false;
    }
  }
  return true;
}

// Individual success p_j per event (equal priors on the members of S_j),
// their mean, and their minimum.
//   n = 2, per-event: p_j = 1 - |<phi_k|phi_l>|.
//   n > 2, per-event: mean success of reciprocal-basis discrimination.
//   fixed:            Born probability of a correct conclusion.
inline SuccessReport success_report(const GameSpec& spec, const QuantumStrategy& strat) {
  validate(spec, strat);
  std::vector<double> per_event;
  for (int j = 0; j < spec.events(); ++j) {
    const auto& set = spec.set(j);
    if (strat.is_fixed()) {
      const EventChannel ch = event_channel(spec, strat, j);
      double sum = 0.0;
      for (int x : set) sum += classify(ch, strat.encoding[static_cast<std::size_t>(x)], x).correct;
      per_event.push_back(sum / static_cast<double>(set.size()));
    } else if (set.size() == 2) {
      per_event.push_back(1.0 - std::abs(overlap(strat.encoding[static_cast<std::size_t>(set[0])],
                                                 strat.encoding[static_cast<std::size_t>(set[1])])));
    } else {
      per_event.push_back(usd_reciprocal(states_of(strat, set)).average_success);
    }
  }
  return SuccessReport::from_events(std::move(per_event));
}

// |<1|2>| + |<2|3>| + |<3|1>|
inline double overlap_sum(std::span<const PureState> states) {
  if (states.size() != 3) throw InvalidInputError("overlap_sum takes exactly three states");
  return std::abs(overlap(states[0], states[1])) + std::abs(overlap(states[1], states[2])) +
         std::abs(overlap(states[2], states[0]));
}

// Average two-state success over all pairs: 1 - 2/(d(d-1)) * sum_{i<k} |<i|k>|.
inline double pairwise_average(std::span<const PureState> states) {
  const std::size_t d = states.size();
  if (d < 2) throw InvalidInputError("need at least two states");
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = i + 1; k < d; ++k) sum += std::abs(overlap(states[i], states[k]));
  }
  return 1.0 - 2.0 * sum / static_cast<double>(d * (d - 1));
}

// Average success of the three-value sub-game on values {k, l, m}.
inline double triple_average(std::span<const PureState> states, int k, int l, int m) {
  const PureState sub[] = {states[static_cast<std::size_t>(k)], states[static_cast<std::size_t>(l)],
                           states[static_cast<std::size_t>(m)]};
  return 1.0 - overlap_sum(sub) / 3.0;
}

// The same average written as the mean of all three-value sub-game averages,
// 6/(d(d-1)(d-2)) * sum_{k<l<m} P3_klm.
inline double triple_decomposed_average(std::span<const PureState> states) {
  const int d = static_cast<int>(states.size());
  if (d < 3) throw InvalidInputError("need at least three states");
  double sum = 0.0;
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      for (int m = l + 1; m < d; ++m) sum += triple_average(states, k, l, m);
    }
  }
  return 6.0 * sum / (static_cast<double>(d) * (d - 1) * (d - 2));
}

// min over pairs of 1 - |<i|k>|
inline double min_pairwise_success(std::span<const PureState> states) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t k = i + 1; k < states.size(); ++k) {
      best = std::min(best, 1.0 - std::abs(overlap(states[i], states[k])));
    }
  }
  return best;
}

}  // namespace qident

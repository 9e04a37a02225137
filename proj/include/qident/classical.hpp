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

// Exhaustive search over deterministic classical strategies.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "qident/game.hpp"

namespace qident {

struct ImpossibilityCertificate {
  GameSpec spec;
  std::uint64_t encodings_checked = 0;
  // Per-event decoder rows examined; zero when the injectivity shortcut is used.
  std::uint64_t decoder_rows_checked = 0;
  bool raw_decoders = false;
  bool winning_found = false;
  std::optional<ClassicalStrategy> witness;

  std::uint64_t strategies_checked() const {
    return raw_decoders ? decoder_rows_checked : encodings_checked;
  }
};

struct SearchOptions {
  // Enumerate every decoder row instead of using the injectivity criterion.
  bool raw_decoders = false;
  int jobs = 1;
};

inline constexpr std::uint64_t kMaxEncodings = 10'000'000;

inline std::uint64_t encoding_count(int d, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > kMaxEncodings) return kMaxEncodings + 1;
  }
  return total;
}

// Encoding number `index` written in base n, least significant value last so
// that increasing indices enumerate encodings lexicographically.
inline std::vector<int> encoding_from_index(std::uint64_t index, int d, int n) {
  std::vector<int> enc(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    enc[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return enc;
}

inline bool injective_on_all_sets(const GameSpec& spec, const std::vector<int>& encoding) {
  std::vector<int> seen(static_cast<std::size_t>(spec.n));
  for (const auto& set : spec.sets) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x : set) {
      if (seen[static_cast<std::size_t>(encoding[static_cast<std::size_t>(x)])]++) return false;
    }
  }
  return true;
}

namespace detail {

struct RawEventSearch {
  std::uint64_t rows_checked = 0;
  std::optional<std::vector<Decision>> winning_row;
};

// Enumerates all (n+1)^n decoder rows for one event. Digit value n encodes
// the inconclusive answer; other digits index into the candidate set.
inline RawEventSearch search_event_rows(const std::vector<int>& set, const std::vector<int>& encoding,
                                        int n) {
  RawEventSearch out;
  std::uint64_t rows = 1;
  for (int i = 0; i < n; ++i) rows *= static_cast<std::uint64_t>(n + 1);
  for (std::uint64_t r = 0; r < rows; ++r) {
    ++out.rows_checked;
    std::vector<Decision> row(static_cast<std::size_t>(n));
    std::uint64_t code = r;
    for (int m = 0; m < n; ++m) {
      const auto digit = static_cast<int>(code % static_cast<std::uint64_t>(n + 1));
      code /= static_cast<std::uint64_t>(n + 1);
      if (digit < n) row[static_cast<std::size_t>(m)] = set[static_cast<std::size_t>(digit)];
    }
    bool ok = true;
    for (int x : set) {
      const Decision& dec = row[static_cast<std::size_t>(encoding[static_cast<std::size_t>(x)])];
      if (!dec || *dec != x) {
        ok = false;
        break;
      }
    }
    if (ok && !out.winning_row) out.winning_row = row;
  }
  return out;
}

struct EncodingVerdict {
  bool wins = false;
  std::uint64_t rows_checked = 0;
  std::optional<ClassicalStrategy> strategy;
};

inline EncodingVerdict check_encoding(const GameSpec& spec, std::vector<int> encoding, bool raw) {
  EncodingVerdict v;
  if (!raw) {
    v.wins = injective_on_all_sets(spec, encoding);
    if (v.wins) v.strategy = ClassicalStrategy::with_canonical_decoder(spec, std::move(encoding));
    return v;
  }
  // A strategy wins iff every event has a winning row: the winning condition
  // is a conjunction over events of constraints on disjoint decoder entries.
  ClassicalStrategy s{encoding, {}, {}};
  bool all = true;
  for (const auto& set : spec.sets) {
    RawEventSearch ev = search_event_rows(set, encoding, spec.n);
    v.rows_checked += ev.rows_checked;
    if (ev.winning_row) {
      s.decoder.push_back(*ev.winning_row);
    } else {
      all = false;
    }
  }
  v.wins = all;
  if (all) v.strategy = std::move(s);
  return v;
}

}  // namespace detail

// Enumerates all n^d encodings and reports whether any admits a winning
// decoder. The witness, if any, is the lexicographically first winning encoding.
inline ImpossibilityCertificate exhaustive_no_win(const GameSpec& spec, SearchOptions opts = {}) {
  const std::uint64_t total = encoding_count(spec.d, spec.n);
  if (total > kMaxEncodings) {
    throw TooLargeError("n^d exceeds the exhaustive-search guard of 10^7 encodings");
  }
  const int jobs = std::max(1, opts.jobs);

  struct Partial {
    std::uint64_t encodings = 0;
    std::uint64_t rows = 0;
    std::optional<std::uint64_t> first_win;
    std::optional<ClassicalStrategy> witness;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    Partial& p = parts[static_cast<std::size_t>(worker)];
    for (std::uint64_t idx = static_cast<std::uint64_t>(worker); idx < total;
         idx += static_cast<std::uint64_t>(jobs)) {
      auto verdict = detail::check_encoding(spec, encoding_from_index(idx, spec.d, spec.n),
                                            opts.raw_decoders);
      ++p.encodings;
      p.rows += verdict.rows_checked;
      if (verdict.wins && !p.first_win) {
        p.first_win = idx;
        p.witness = std::move(verdict.strategy);
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

  ImpossibilityCertificate cert{spec, 0, 0, opts.raw_decoders, false, std::nullopt};
  std::optional<std::uint64_t> best;
  for (Partial& p : parts) {
    cert.encodings_checked += p.encodings;
    cert.decoder_rows_checked += p.rows;
    if (p.first_win && (!best || *p.first_win < *best)) {
      best = p.first_win;
      cert.witness = std::move(p.witness);
    }
  }
  cert.winning_found = best.has_value();
  if (cert.witness) cert.witness->name = "exhaustive-witness";
  return cert;
}

// Number of value triples that are not monochromatic under a k / (d-k) bit
// split; exactly those triples reach the three-value classical maximum 2/3.
inline std::int64_t count_max_triples(int d, int k) {
  if (d < 0 || k < 0 || k > d) {
    throw InvalidInputError("split size must satisfy 0 <= k <= d");
  }
  return binomial(d, 3) - binomial(k, 3) - binomial(d - k, 3);
}

struct ClassicalAvgReport {
  GameSpec spec;
  double best_average = 0.0;
  std::vector<int> best_encoding;
  std::int64_t n_max_triples = 0;
  bool brute_forced = false;
};

inline constexpr int kBruteForceMaxD = 16;
inline constexpr int kClassicalAvgMaxD = 20;

// Same bit -> identical states (pair success 0); different bits -> orthogonal
// states (pair success 1).
inline double classical_pair_average(const std::vector<int>& bits) {
  const auto d = static_cast<std::int64_t>(bits.size());
  std::int64_t mono = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::size_t k = i + 1; k < bits.size(); ++k) mono += bits[i] == bits[k];
  }
  return 1.0 - static_cast<double>(mono) / static_cast<double>(d * (d - 1) / 2);
}

// Best average success of a bit encoding, brute forced over all 2^d
// assignments for d <= 16 and taken from the split formula above that.
// The returned encoding puts the first ceil(d/2) values on bit 0.
inline ClassicalAvgReport best_classical_avg(const GameSpec& spec) {
  if (spec.n != 2) throw UnsupportedError("classical average search is implemented for n = 2");
  const int d = spec.d;
  if (d > kClassicalAvgMaxD) throw TooLargeError("classical average search supports d <= 20");
  ClassicalAvgReport r{spec, -1.0, {}, 0, d <= kBruteForceMaxD};
  if (r.brute_forced) {
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto bits = encoding_from_index(idx, d, 2);
      const double avg = classical_pair_average(bits);
      if (avg > r.best_average + 1e-12) {
        r.best_average = avg;
        r.best_encoding = std::move(bits);
      }
    }
  } else {
    for (int k = 0; k <= d; ++k) {
      const double mono = static_cast<double>(binomial(k, 2) + binomial(d - k, 2));
      const double avg = 1.0 - mono / static_cast<double>(binomial(d, 2));
      if (avg > r.best_average + 1e-12) {
        r.best_average = avg;
        r.best_encoding.assign(static_cast<std::size_t>(d), 1);
        std::fill_n(r.best_encoding.begin(), d - k, 0);
      }
    }
  }
  const auto zeros = static_cast<int>(std::count(r.best_encoding.begin(), r.best_encoding.end(), 0));
  r.n_max_triples = count_max_triples(d, zeros);
  return r;
}

}  // namespace qident

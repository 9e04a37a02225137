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

// JSON and CSV encodings of strategies and results. The schema is written up
// in docs/INTERFACES.md; complex numbers are [re, im] pairs throughout.

#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qident/classical.hpp"
#include "qident/families.hpp"
#include "qident/game.hpp"
#include "qident/optimize.hpp"
#include "qident/sim.hpp"

namespace qident {

using json = nlohmann::json;

namespace detail {

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInputError("complex number must be a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw InvalidInputError("matrix must have " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw InvalidInputError("matrix must be square with " + std::to_string(dim) + " columns");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidInputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace detail

// ---- strategies ----

inline json povm_json(const Povm& p) {
  json elements = json::array();
  for (const Matrix& e : p.elements) elements.push_back(detail::matrix_json(e));
  return {{"rule", p.rule == OutcomeRule::identifies ? "identifies" : "eliminates"},
          {"elements", std::move(elements)},
          {"inconclusive", detail::matrix_json(p.inconclusive)}};
}

inline Povm povm_from_json(const json& j, int dim) {
  Povm p;
  const std::string rule = detail::field(j, "rule").get<std::string>();
  if (rule == "identifies") {
    p.rule = OutcomeRule::identifies;
  } else if (rule == "eliminates") {
    p.rule = OutcomeRule::eliminates;
  } else {
    throw InvalidInputError("povm rule must be \"identifies\" or \"eliminates\"");
  }
  for (const json& e : detail::field(j, "elements")) p.elements.push_back(detail::matrix_from(e, dim));
  p.inconclusive = j.contains("inconclusive") ? detail::matrix_from(j.at("inconclusive"), dim)
                                              : Matrix::Zero(dim, dim);
  return p;
}

inline json strategy_json(const GameSpec& spec, const QuantumStrategy& s) {
  json enc = json::array();
  for (const PureState& st : s.encoding) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < st.amplitudes().size(); ++i) {
      amps.push_back(detail::complex_json(st.amplitudes()[i]));
    }
    enc.push_back(std::move(amps));
  }
  json out = {{"d", spec.d},
              {"n", spec.n},
              {"kind", "quantum"},
              {"name", s.name},
              {"encoding", std::move(enc)},
              {"measurement", s.is_fixed() ? "fixed" : "per_event"}};
  if (const auto* fixed = std::get_if<Fixed>(&s.measurement)) out["povm"] = povm_json(fixed->povm);
  return out;
}

inline json strategy_json(const GameSpec& spec, const ClassicalStrategy& s) {
  json decoder = json::array();
  for (const auto& row : s.decoder) {
    json r = json::array();
    for (const Decision& d : row) r.push_back(d ? json(*d) : json(nullptr));
    decoder.push_back(std::move(r));
  }
  return {{"d", spec.d},          {"n", spec.n},         {"kind", "classical"},
          {"name", s.name},       {"encoding", s.encoding}, {"decoder", std::move(decoder)}};
}

inline json family_json(const FamilyInstance& f) {
  json out = strategy_json(f.game(), f.strategy());
  out["parameters"] = f.parameters;
  return out;
}

struct StrategyFile {
  GameSpec spec;
  std::variant<QuantumStrategy, ClassicalStrategy> strategy;

  bool is_quantum() const { return std::holds_alternative<QuantumStrategy>(strategy); }
  const std::string& name() const {
    return is_quantum() ? std::get<QuantumStrategy>(strategy).name
                        : std::get<ClassicalStrategy>(strategy).name;
  }
};

// Parses and validates a strategy object. A fixed quantum strategy without a
// "povm" field gets the elimination measurement of its three states.
inline StrategyFile strategy_from_json(const json& j) {
  const int d = detail::int_field(j, "d");
  const int n = detail::int_field(j, "n");
  StrategyFile file{GameSpec::make(d, n), QuantumStrategy{}};
  const std::string kind = detail::field(j, "kind").get<std::string>();
  const std::string name = j.value("name", std::string{});
  const json& enc = detail::field(j, "encoding");
  if (!enc.is_array()) throw InvalidInputError("\"encoding\" must be an array");

  try {
    if (kind == "quantum") {
      QuantumStrategy q;
      q.name = name;
      for (const json& amps : enc) {
        if (!amps.is_array()) throw InvalidInputError("each quantum codeword is an amplitude list");
        Vector v(static_cast<Eigen::Index>(amps.size()));
        for (std::size_t i = 0; i < amps.size(); ++i) {
          v[static_cast<Eigen::Index>(i)] = detail::complex_from(amps[i]);
        }
        q.encoding.emplace_back(std::move(v));
      }
      const std::string meas = j.value("measurement", std::string("per_event"));
      if (meas == "fixed") {
        q.measurement = Fixed{j.contains("povm") ? povm_from_json(j.at("povm"), n)
                                                 : elimination_povm(q.encoding).povm};
      } else if (meas != "per_event") {
        throw InvalidInputError("\"measurement\" must be \"per_event\" or \"fixed\"");
      }
      validate(file.spec, q);
      file.strategy = std::move(q);
    } else if (kind == "classical") {
      ClassicalStrategy c;
      c.name = name;
      for (const json& m : enc) {
        if (!m.is_number_integer()) throw InvalidInputError("classical messages must be integers");
        c.encoding.push_back(m.get<int>());
      }
      if (j.contains("decoder")) {
        for (const json& row : j.at("decoder")) {
          std::vector<Decision> r;
          for (const json& v : row) r.push_back(v.is_null() ? Decision{} : Decision(v.get<int>()));
          c.decoder.push_back(std::move(r));
        }
      } else {
        c = ClassicalStrategy::with_canonical_decoder(file.spec, c.encoding, name);
      }
      validate(file.spec, c);
      file.strategy = std::move(c);
    } else {
      throw InvalidInputError("\"kind\" must be \"quantum\" or \"classical\"");
    }
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed strategy: ") + e.what());
  }
  return file;
}

inline StrategyFile load_strategy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
  return strategy_from_json(j);
}

// ---- results ----

inline json report_json(const SuccessReport& r) {
  return {{"per_event", r.per_event}, {"average", r.average}, {"epsilon", r.epsilon}};
}

inline json stats_json(const SimStats& s) {
  json events = json::array();
  for (std::size_t j = 0; j < s.per_event_trials.size(); ++j) {
    events.push_back({{"j", j},
                      {"trials", s.per_event_trials[j]},
                      {"correct", s.per_event_conclusive_correct[j]},
                      {"wrong", s.per_event_wrong[j]},
                      {"inconclusive", s.per_event_inconclusive[j]},
                      {"rate", s.rate(static_cast<int>(j))}});
  }
  return {{"d", s.d},
          {"n", s.n},
          {"strategy_name", s.strategy_name},
          {"rounds", s.rounds},
          {"seed", s.seed},
          {"correct", s.correct()},
          {"conclusive_wrong", s.conclusive_wrong},
          {"inconclusive", s.inconclusive},
          {"events", std::move(events)}};
}

inline const char* kStatsCsvHeader = "d,n,strategy_name,j,rounds,correct,wrong,inconclusive,rate,seed";

// One row per event; "rounds" is the number of rounds that drew that event.
inline void write_stats_csv(std::ostream& out, const SimStats& s) {
  out << kStatsCsvHeader << '\n';
  std::ostringstream rate;
  rate.precision(10);
  for (std::size_t j = 0; j < s.per_event_trials.size(); ++j) {
    rate.str({});
    rate << s.rate(static_cast<int>(j));
    out << s.d << ',' << s.n << ',' << s.strategy_name << ',' << j << ',' << s.per_event_trials[j]
        << ',' << s.per_event_conclusive_correct[j] << ',' << s.per_event_wrong[j] << ','
        << s.per_event_inconclusive[j] << ',' << rate.str() << ',' << s.seed << '\n';
  }
}

inline json certificate_json(const ImpossibilityCertificate& c) {
  json out = {{"d", c.spec.d},
              {"n", c.spec.n},
              {"encodings_checked", c.encodings_checked},
              {"decoder_rows_checked", c.decoder_rows_checked},
              {"raw_decoders", c.raw_decoders},
              {"strategies_checked", c.strategies_checked()},
              {"winning_found", c.winning_found}};
  out["witness"] = c.witness ? strategy_json(c.spec, *c.witness) : json(nullptr);
  return out;
}

inline json classical_avg_json(const ClassicalAvgReport& r) {
  return {{"d", r.spec.d},
          {"n", r.spec.n},
          {"best_average", r.best_average},
          {"best_encoding", r.best_encoding},
          {"n_max_triples", r.n_max_triples},
          {"brute_forced", r.brute_forced}};
}

inline json optimization_json(const OptimizationResult& r) {
  return {{"objective_name", r.objective_name},
          {"best_value", r.best_value},
          {"parameter_names", r.parameter_names},
          {"best_parameters", r.best_parameters},
          {"grid_resolution", r.grid_resolution},
          {"grid_value", r.grid_value},
          {"refinement_rounds", r.refinement_rounds},
          {"diagnostics", r.diagnostics}};
}

}  // namespace qident

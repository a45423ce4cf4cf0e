#pragma once

// JSON form of a pulse sequence, schema (field names are part of the
// interface):
//   {"n": int, "target": int, "xi": [f, f], "alpha": [f, f, f],
//    "phi": [f, f, f]}
// Optimization results add "fidelity", "duration" and "converged".

#include "optimizer.hpp"
#include "pulse_sequence.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace dicke {

inline nlohmann::json to_json(const PulseSequence& seq) {
  return nlohmann::json{{"n", seq.n_qubits},
                        {"target", seq.target_excitation},
                        {"xi", {seq.xi[0], seq.xi[1]}},
                        {"alpha", {seq.alpha[0], seq.alpha[1], seq.alpha[2]}},
                        {"phi", {seq.phi[0], seq.phi[1], seq.phi[2]}}};
}

namespace detail {

inline double number_field(const nlohmann::json& arr, std::size_t i,
                           const std::string& name) {
  if (!arr[i].is_number())
    throw std::invalid_argument("invalid entry in field \"" + name + "\"");
  return arr[i].get<double>();
}

inline nlohmann::json array_field(const nlohmann::json& j, const std::string& name,
                                  std::size_t len) {
  if (!j.contains(name) || !j[name].is_array() || j[name].size() != len)
    throw std::invalid_argument("missing or invalid field \"" + name + "\"");
  return j[name];
}

}  // namespace detail

inline PulseSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("missing or invalid field \"n\"");
  if (!j.contains("target") || !j["target"].is_number_integer())
    throw std::invalid_argument("missing or invalid field \"target\"");
  const nlohmann::json xi = detail::array_field(j, "xi", 2);
  const nlohmann::json alpha = detail::array_field(j, "alpha", 3);
  const nlohmann::json phi = detail::array_field(j, "phi", 3);
  PulseSequence seq;
  seq.n_qubits = j["n"].get<int>();
  seq.target_excitation = j["target"].get<int>();
  for (std::size_t i = 0; i < 2; ++i) seq.xi[i] = detail::number_field(xi, i, "xi");
  for (std::size_t i = 0; i < 3; ++i) {
    seq.alpha[i] = detail::number_field(alpha, i, "alpha");
    seq.phi[i] = detail::number_field(phi, i, "phi");
  }
  validate(seq);
  return seq;
}

inline PulseSequence load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open params file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return sequence_from_json(j);
}

inline nlohmann::json to_json(const OptimizationResult& result) {
  nlohmann::json j = to_json(result.best);
  j["fidelity"] = result.fidelity;
  j["duration"] = total_duration(result.best);
  j["converged"] = result.converged;
  return j;
}

}  // namespace dicke

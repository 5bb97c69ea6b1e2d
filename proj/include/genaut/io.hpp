#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "genaut/automaton.hpp"

namespace genaut {

/// JSON image of an automaton:
///   {"semiring": "real", "alphabet": "CD", "n": 2,
///    "entry": [...], "final": [...],
///    "trans": {"C": [[...], ...], "D": [[...], ...]}}
/// Doubles survive the round trip exactly (shortest round-trip printing).
nlohmann::json to_json(const WeightedAutomaton& a);

/// Inverse of to_json. Malformed documents are a ParameterError carrying
/// the offending field.
WeightedAutomaton automaton_from_json(const nlohmann::json& j);

/// Reads one automaton from a JSON file. Unreadable file → ConfigError;
/// bad content → ParameterError.
WeightedAutomaton load_automaton(const std::filesystem::path& path);

/// Writes text to path atomically (temp file + rename) so readers never
/// observe a partial document. Failures → ConfigError.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);

/// save_automaton == write_text_atomic(path, to_json(a).dump(2) + "\n").
void save_automaton(const WeightedAutomaton& a,
                    const std::filesystem::path& path);

/// Fitness values may be infinite; JSON has no literal for that, so
/// +infinity is encoded as the string "inf" and finite values as numbers.
nlohmann::json fitness_to_json(double f);
double fitness_from_json(const nlohmann::json& j);

}  // namespace genaut

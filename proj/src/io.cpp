#include "genaut/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace genaut {

namespace {

Eigen::RowVectorXd row_from_json(const nlohmann::json& j,
                                 const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParameterError("field \"" + field + "\" must be a nonempty array");
  }
  Eigen::RowVectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ParameterError("field \"" + field + "\" must hold numbers");
    }
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

}  // namespace

nlohmann::json to_json(const WeightedAutomaton& a) {
  nlohmann::json j;
  j["semiring"] = semiring_name(a.semiring());
  j["alphabet"] = a.alphabet();
  j["n"] = a.state_count();
  j["entry"] = std::vector<double>(a.entry().begin(), a.entry().end());
  j["final"] = std::vector<double>(a.final().begin(), a.final().end());
  nlohmann::json trans = nlohmann::json::object();
  for (Eigen::Index l = 0; l < a.letter_count(); ++l) {
    const Eigen::MatrixXd& m = a.trans_at(l);
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    trans[std::string(1, a.alphabet()[static_cast<std::size_t>(l)])] =
        std::move(rows);
  }
  j["trans"] = std::move(trans);
  return j;
}

WeightedAutomaton automaton_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("automaton document must be an object");
  for (const char* field : {"semiring", "alphabet", "n", "entry", "final", "trans"}) {
    if (!j.contains(field)) {
      throw ParameterError(std::string("automaton document lacks \"") + field +
                           "\"");
    }
  }
  if (!j["semiring"].is_string() || !j["alphabet"].is_string() ||
      !j["n"].is_number_integer()) {
    throw ParameterError("fields semiring/alphabet/n have wrong types");
  }
  SemiringKind kind = semiring_from_name(j["semiring"].get<std::string>());
  std::string alphabet = j["alphabet"].get<std::string>();
  auto n = j["n"].get<std::int64_t>();
  if (n < 1) throw ParameterError("field \"n\" must be >= 1");

  Eigen::RowVectorXd entry = row_from_json(j["entry"], "entry");
  Eigen::VectorXd final = row_from_json(j["final"], "final").transpose();
  if (entry.size() != n || final.size() != n) {
    throw ParameterError("entry/final length differs from n");
  }

  if (!j["trans"].is_object()) {
    throw ParameterError("field \"trans\" must map letters to row lists");
  }
  if (j["trans"].size() != alphabet.size()) {
    throw ParameterError("field \"trans\" must have one key per alphabet symbol");
  }
  std::vector<Eigen::MatrixXd> trans;
  trans.reserve(alphabet.size());
  for (char c : alphabet) {
    std::string key(1, c);
    if (!j["trans"].contains(key)) {
      throw ParameterError("field \"trans\" lacks key \"" + key + "\"");
    }
    const nlohmann::json& rows = j["trans"][key];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
      throw ParameterError("trans[\"" + key + "\"] must list n rows");
    }
    Eigen::MatrixXd m(n, n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Eigen::RowVectorXd row = row_from_json(rows[r], "trans[\"" + key + "\"]");
      if (row.size() != n) {
        throw ParameterError("trans[\"" + key + "\"] rows must have n entries");
      }
      m.row(static_cast<Eigen::Index>(r)) = row;
    }
    trans.push_back(std::move(m));
  }
  try {
    return WeightedAutomaton(kind, std::move(alphabet), std::move(entry),
                             std::move(final), std::move(trans));
  } catch (const Error& e) {
    throw ParameterError(std::string("automaton document invalid: ") + e.what());
  }
}

WeightedAutomaton load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open \"" + path.string() + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("\"" + path.string() + "\" is not valid JSON: " +
                         e.what());
  }
  return automaton_from_json(j);
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write \"" + tmp.string() + "\"");
    out << text;
    out.flush();
    if (!out) throw ConfigError("write to \"" + tmp.string() + "\" failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw ConfigError("cannot move \"" + tmp.string() + "\" to \"" +
                      path.string() + "\": " + ec.message());
  }
}

void save_automaton(const WeightedAutomaton& a,
                    const std::filesystem::path& path) {
  write_text_atomic(path, to_json(a).dump(2) + "\n");
}

nlohmann::json fitness_to_json(double f) {
  if (std::isinf(f)) return f > 0 ? "inf" : "-inf";
  return f;
}

double fitness_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ParameterError("fitness value must be a number or \"inf\"");
}

}  // namespace genaut

#include "genaut/automaton.hpp"

#include <algorithm>
#include <cmath>

namespace genaut {

double BehaviorTable::weight_of(const Word& w) const {
  auto it = std::find(words.begin(), words.end(), w);
  if (it == words.end()) {
    throw ParameterError("word \"" + w + "\" is not in the behavior table");
  }
  return weights(static_cast<Eigen::Index>(it - words.begin()));
}

WeightedAutomaton::WeightedAutomaton(SemiringKind semiring,
                                     std::string alphabet,
                                     Eigen::RowVectorXd entry,
                                     Eigen::VectorXd final,
                                     std::vector<Eigen::MatrixXd> trans)
    : semiring_(semiring),
      alphabet_(std::move(alphabet)),
      entry_(std::move(entry)),
      final_(std::move(final)),
      trans_(std::move(trans)) {
  if (alphabet_.empty()) throw AlphabetError("alphabet must be nonempty");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_.find(alphabet_[i], i + 1) != std::string::npos) {
      throw AlphabetError(std::string("duplicate alphabet symbol '") +
                          alphabet_[i] + "'");
    }
  }
  const Eigen::Index n = entry_.size();
  if (n < 1) throw ShapeError("automaton needs at least one state");
  if (final_.size() != n) {
    throw ShapeError("final vector length differs from state count");
  }
  if (trans_.size() != alphabet_.size()) {
    throw ShapeError("expected one transition matrix per alphabet symbol");
  }
  for (const auto& m : trans_) {
    if (m.rows() != n || m.cols() != n) {
      throw ShapeError("transition matrices must be state_count x state_count");
    }
  }
  if (semiring_ == SemiringKind::Boolean) {
    bool ok = detail::all_boolean01(entry_) && detail::all_boolean01(final_);
    for (const auto& m : trans_) ok = ok && detail::all_boolean01(m);
    if (!ok) {
      throw AlgebraError("boolean automaton values must be exactly 0 or 1");
    }
  }
}

Eigen::Index WeightedAutomaton::letter_index(char letter) const {
  auto pos = alphabet_.find(letter);
  if (pos == std::string::npos) {
    throw AlphabetError(std::string("symbol '") + letter +
                        "' is not in alphabet \"" + alphabet_ + "\"");
  }
  return static_cast<Eigen::Index>(pos);
}

const Eigen::MatrixXd& WeightedAutomaton::trans(char letter) const {
  return trans_[letter_index(letter)];
}

double word_weight(const WeightedAutomaton& a, const Word& w) {
  Eigen::MatrixXd state = a.entry();  // 1 x n, propagated left to right
  for (char c : w) {
    state = detail::product_in(a.semiring(), state, a.trans(c));
  }
  Eigen::MatrixXd s = detail::product_in(a.semiring(), state, a.final());
  return s(0, 0);
}

BehaviorTable behavior(const WeightedAutomaton& a, int max_len) {
  if (max_len < 0) throw ParameterError("behavior: max_len must be >= 0");
  const std::uint64_t k = static_cast<std::uint64_t>(a.letter_count());
  std::uint64_t total = 1, layer = 1;
  for (int len = 1; len <= max_len; ++len) {
    layer *= k;
    total += layer;
    if (total > kMaxBehaviorEntries) {
      throw ParameterError("behavior: table would exceed entry limit");
    }
  }

  BehaviorTable table;
  table.max_len = max_len;
  table.words.reserve(total);
  table.words.emplace_back();
  // Words of length m are the length m-1 block with every symbol appended,
  // which yields length-then-lexicographic order in alphabet order.
  std::size_t block_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t block_end = table.words.size();
    for (std::size_t i = block_begin; i < block_end; ++i) {
      for (char c : a.alphabet()) {
        table.words.push_back(table.words[i] + c);
      }
    }
    block_begin = block_end;
  }

  table.weights.resize(static_cast<Eigen::Index>(table.words.size()));
  for (std::size_t i = 0; i < table.words.size(); ++i) {
    table.weights(static_cast<Eigen::Index>(i)) = word_weight(a, table.words[i]);
  }
  return table;
}

Eigen::VectorXd vectorize(const WeightedAutomaton& a) {
  const Eigen::Index n = a.state_count();
  const Eigen::Index k = a.letter_count();
  Eigen::VectorXd v(k * n * n + 2 * n);
  v.head(n) = a.entry().transpose();
  v.segment(n, n) = a.final();
  Eigen::Index off = 2 * n;
  for (Eigen::Index l = 0; l < k; ++l) {
    const Eigen::MatrixXd& m = a.trans_at(l);
    for (Eigen::Index r = 0; r < n; ++r) {
      v.segment(off, n) = m.row(r).transpose();
      off += n;
    }
  }
  return v;
}

WeightedAutomaton automaton_from_vector(
    SemiringKind semiring, const std::string& alphabet, Eigen::Index n,
    const Eigen::Ref<const Eigen::VectorXd>& v) {
  const Eigen::Index k = static_cast<Eigen::Index>(alphabet.size());
  if (n < 1) throw ShapeError("automaton needs at least one state");
  if (v.size() != k * n * n + 2 * n) {
    throw ShapeError("vector length does not match k*n^2 + 2n");
  }
  Eigen::RowVectorXd entry = v.head(n).transpose();
  Eigen::VectorXd final = v.segment(n, n);
  std::vector<Eigen::MatrixXd> trans;
  trans.reserve(static_cast<std::size_t>(k));
  Eigen::Index off = 2 * n;
  for (Eigen::Index l = 0; l < k; ++l) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      m.row(r) = v.segment(off, n).transpose();
      off += n;
    }
    trans.push_back(std::move(m));
  }
  return WeightedAutomaton(semiring, alphabet, std::move(entry),
                           std::move(final), std::move(trans));
}

double automaton_distance(const WeightedAutomaton& a1,
                          const WeightedAutomaton& a2, double alpha) {
  if (a1.semiring() != SemiringKind::Real ||
      a2.semiring() != SemiringKind::Real) {
    throw ComparabilityError("automaton_distance requires Real automata");
  }
  if (a1.alphabet() != a2.alphabet()) {
    throw ComparabilityError("automaton_distance requires equal alphabets");
  }
  if (a1.state_count() != a2.state_count()) {
    throw ComparabilityError("automaton_distance requires equal state counts");
  }
  return hoelder_norm(vectorize(a1) - vectorize(a2), alpha);
}

double behavior_gap(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                    int max_len, double alpha) {
  if (a1.alphabet() != a2.alphabet()) {
    throw ComparabilityError("behavior_gap requires equal alphabets");
  }
  BehaviorTable b1 = behavior(a1, max_len);
  BehaviorTable b2 = behavior(a2, max_len);
  return hoelder_norm(b1.weights - b2.weights, alpha);
}

bool is_stochastic(const WeightedAutomaton& a, double tol) {
  if (a.semiring() != SemiringKind::Real) return false;
  if (std::abs(a.entry().sum() - 1.0) > tol) return false;
  if (a.entry().minCoeff() < -tol) return false;
  for (Eigen::Index l = 0; l < a.letter_count(); ++l) {
    const Eigen::MatrixXd& m = a.trans_at(l);
    if (m.minCoeff() < -tol) return false;
    for (Eigen::Index r = 0; r < a.state_count(); ++r) {
      if (std::abs(m.row(r).sum() - 1.0) > tol) return false;
    }
  }
  return true;
}

}  // namespace genaut

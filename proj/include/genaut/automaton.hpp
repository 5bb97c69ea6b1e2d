#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "genaut/semiring.hpp"

namespace genaut {

/// A word over the automaton's alphabet; each char is one symbol.
using Word = std::string;

/// Weights of every word up to a length bound, in length-then-lexicographic
/// order of the declared alphabet (the empty word first).
struct BehaviorTable {
  int max_len = 0;
  std::vector<Word> words;
  Eigen::VectorXd weights;

  /// Weight of one listed word; ParameterError if absent.
  double weight_of(const Word& w) const;
};

/// A weighted finite automaton in linear representation: an entry row
/// vector, one transition matrix per alphabet symbol, and a final column
/// vector, all over a common semiring. Instances are immutable; genetic
/// operators build new ones.
class WeightedAutomaton {
 public:
  /// Validates: nonempty alphabet of distinct symbols (AlphabetError),
  /// conforming dimensions with at least one state (ShapeError), one
  /// transition matrix per symbol (ShapeError), and 0/1 values when the
  /// semiring is Boolean (AlgebraError).
  WeightedAutomaton(SemiringKind semiring, std::string alphabet,
                    Eigen::RowVectorXd entry, Eigen::VectorXd final,
                    std::vector<Eigen::MatrixXd> trans);

  SemiringKind semiring() const noexcept { return semiring_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  Eigen::Index state_count() const noexcept { return entry_.size(); }
  Eigen::Index letter_count() const noexcept {
    return static_cast<Eigen::Index>(alphabet_.size());
  }

  const Eigen::RowVectorXd& entry() const noexcept { return entry_; }
  const Eigen::VectorXd& final() const noexcept { return final_; }
  const std::vector<Eigen::MatrixXd>& trans() const noexcept { return trans_; }

  /// Transition matrix of one symbol; AlphabetError if unknown.
  const Eigen::MatrixXd& trans(char letter) const;
  const Eigen::MatrixXd& trans_at(Eigen::Index i) const { return trans_[i]; }

  /// Index of a symbol in the alphabet; AlphabetError if unknown.
  Eigen::Index letter_index(char letter) const;

 private:
  SemiringKind semiring_;
  std::string alphabet_;
  Eigen::RowVectorXd entry_;
  Eigen::VectorXd final_;
  std::vector<Eigen::MatrixXd> trans_;
};

/// Weight assigned to a word: entry * trans(w_1) * ... * trans(w_m) * final
/// in the automaton's semiring. AlphabetError on foreign symbols.
double word_weight(const WeightedAutomaton& a, const Word& w);

/// Tabulates word_weight for every word of length 0..max_len. max_len < 0
/// is a ParameterError, as is a table that would exceed kMaxBehaviorEntries.
inline constexpr std::uint64_t kMaxBehaviorEntries = 1u << 22;
BehaviorTable behavior(const WeightedAutomaton& a, int max_len);

/// Flattens an automaton to the vector
///   [entry | final | trans(symbol 0) row-major | trans(symbol 1) ... ]
/// of dimension k*n^2 + 2n for n states and k symbols.
Eigen::VectorXd vectorize(const WeightedAutomaton& a);

/// Rebuilds an automaton from its vectorize() image. ShapeError if the
/// vector length is not k*n^2 + 2n.
WeightedAutomaton automaton_from_vector(SemiringKind semiring,
                                        const std::string& alphabet,
                                        Eigen::Index n,
                                        const Eigen::Ref<const Eigen::VectorXd>& v);

/// Hoelder distance between the vectorize() images. Both automata must be
/// Real with the same alphabet and state count (ComparabilityError).
double automaton_distance(const WeightedAutomaton& a1,
                          const WeightedAutomaton& a2, double alpha = 2.0);

/// Hoelder distance between behavior tables truncated at max_len. Requires
/// equal alphabets only (ComparabilityError); state counts may differ.
double behavior_gap(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                    int max_len, double alpha = 2.0);

/// True when the automaton is Real, its entry vector sums to 1 and every
/// transition row sums to 1, all within tol.
bool is_stochastic(const WeightedAutomaton& a, double tol = 1e-9);

}  // namespace genaut

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "genaut/automaton.hpp"
#include "genaut/ipd.hpp"
#include "test_support.hpp"

using genaut::SemiringKind;
using genaut::WeightedAutomaton;

namespace {

/// Two-state Boolean recognizer of words ending in 'b' over alphabet "ab".
WeightedAutomaton ends_in_b() {
  Eigen::RowVectorXd entry(2);
  entry << 1, 0;
  Eigen::VectorXd final(2);
  final << 0, 1;
  Eigen::MatrixXd ta(2, 2), tb(2, 2);
  ta << 1, 0, 1, 0;
  tb << 0, 1, 0, 1;
  return WeightedAutomaton(SemiringKind::Boolean, "ab", entry, final,
                           {ta, tb});
}

WeightedAutomaton uniform_strategy() {
  return genaut::make_uniform_random().core();
}

}  // namespace

TEST_CASE("construction validates alphabet, shapes, boolean domain") {
  Eigen::RowVectorXd entry(2);
  entry << 1, 0;
  Eigen::VectorXd final(2);
  final << 0, 1;
  std::vector<Eigen::MatrixXd> trans{Eigen::MatrixXd::Identity(2, 2)};
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Real, "", entry, final,
                                    {}),
                  genaut::AlphabetError);
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Real, "aa", entry, final,
                                    {trans[0], trans[0]}),
                  genaut::AlphabetError);
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Real, "ab", entry, final,
                                    trans),
                  genaut::ShapeError);  // one matrix for two letters
  Eigen::VectorXd final3(3);
  final3 << 0, 1, 0;
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Real, "a", entry, final3,
                                    trans),
                  genaut::ShapeError);
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Real, "a", entry, final,
                                    {Eigen::MatrixXd::Identity(3, 3)}),
                  genaut::ShapeError);
  Eigen::MatrixXd halves = Eigen::MatrixXd::Constant(2, 2, 0.5);
  CHECK_THROWS_AS(WeightedAutomaton(SemiringKind::Boolean, "a", entry, final,
                                    {halves}),
                  genaut::AlgebraError);
  CHECK_NOTHROW(WeightedAutomaton(SemiringKind::Real, "a", entry, final,
                                  {halves}));
}

TEST_CASE("letter lookup") {
  WeightedAutomaton a = ends_in_b();
  CHECK(a.letter_index('a') == 0);
  CHECK(a.letter_index('b') == 1);
  CHECK_THROWS_AS(a.letter_index('c'), genaut::AlphabetError);
  CHECK(a.trans('b')(0, 1) == 1.0);
}

TEST_CASE("word weight: deterministic strategy puts all mass on state 1") {
  WeightedAutomaton all_one = genaut::build_strategy({1, 1, 1, 1, 1, 1}).core();
  CHECK(genaut::word_weight(all_one, "C") == 1.0);
}

TEST_CASE("word weight: uniform strategy weighs every word 0.5") {
  WeightedAutomaton a = uniform_strategy();
  for (const char* w : {"", "C", "D", "CC", "CD", "DDC", "CDCD"}) {
    CHECK(genaut::word_weight(a, w) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("word weight: boolean recognizer agrees with the language") {
  WeightedAutomaton a = ends_in_b();
  CHECK(genaut::word_weight(a, "ab") == 1.0);
  CHECK(genaut::word_weight(a, "ba") == 0.0);
  CHECK(genaut::word_weight(a, "") == 0.0);
  CHECK(genaut::word_weight(a, "abbb") == 1.0);
  CHECK_THROWS_AS(genaut::word_weight(a, "abc"), genaut::AlphabetError);
}

TEST_CASE("empty word weight is entry times final") {
  std::mt19937_64 rng(7);
  auto a = testsupport::random_real_automaton(rng, 3, "xy");
  CHECK(genaut::word_weight(a, "") ==
        doctest::Approx((a.entry() * a.final()).value()).epsilon(1e-15));
}

TEST_CASE("morphism law: split evaluation equals full evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 4, "ab", 0.0, 1.0);
    int l1 = len(rng), l2 = len(rng);
    std::string u, v;
    std::uniform_int_distribution<int> letter(0, 1);
    for (int i = 0; i < l1; ++i) u += "ab"[letter(rng)];
    for (int i = 0; i < l2; ++i) v += "ab"[letter(rng)];
    // mu(u) and mu(v) as explicit products, then one bilinear collapse
    Eigen::MatrixXd mu = Eigen::MatrixXd::Identity(4, 4);
    for (char c : u) mu = mu * a.trans(c);
    Eigen::MatrixXd mv = Eigen::MatrixXd::Identity(4, 4);
    for (char c : v) mv = mv * a.trans(c);
    double split = (a.entry() * (mu * mv) * a.final()).value();
    CHECK(genaut::word_weight(a, u + v) ==
          doctest::Approx(split).epsilon(1e-12));
  }
}

TEST_CASE("boolean word weight equals NFA subset simulation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testsupport::random_boolean_automaton(rng, 4, "ab", 0.35);
    // exhaustive over words of length <= 5
    std::vector<std::string> words{""};
    std::size_t begin = 0;
    for (int len = 1; len <= 5; ++len) {
      std::size_t end = words.size();
      for (std::size_t i = begin; i < end; ++i) {
        words.push_back(words[i] + 'a');
        words.push_back(words[i] + 'b');
      }
      begin = end;
    }
    for (const auto& w : words) {
      double weight = genaut::word_weight(a, w);
      CHECK(weight == (testsupport::nfa_accepts(a, w) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("word weight matches scalar-loop oracle on random automata") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 3, "abc", -1.0, 1.0);
    std::string w;
    for (int i = 0; i < 5; ++i) w += "abc"[letter(rng)];
    CHECK(genaut::word_weight(a, w) ==
          doctest::Approx(testsupport::word_weight_oracle(a, w))
              .epsilon(1e-12));
  }
}

TEST_CASE("behavior: length-0 table holds only the empty word") {
  auto t = genaut::behavior(uniform_strategy(), 0);
  CHECK(t.words == std::vector<genaut::Word>{""});
  CHECK(t.weights.size() == 1);
  CHECK(t.weights(0) == doctest::Approx(0.5));
}

TEST_CASE("behavior: uniform strategy table is constant 0.5") {
  auto t = genaut::behavior(uniform_strategy(), 2);
  CHECK(t.words.size() == 7);  // 1 + 2 + 4
  for (Eigen::Index i = 0; i < t.weights.size(); ++i) {
    CHECK(t.weights(i) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("behavior: enumeration follows declared alphabet order") {
  WeightedAutomaton a = ends_in_b();
  auto t = genaut::behavior(a, 1);
  CHECK(t.words == std::vector<genaut::Word>{"", "a", "b"});
  CHECK(t.weights(0) == 0.0);
  CHECK(t.weights(1) == 0.0);
  CHECK(t.weights(2) == 1.0);
  CHECK(t.weight_of("b") == 1.0);
  CHECK_THROWS_AS(t.weight_of("bb"), genaut::ParameterError);

  // Same machine, reversed declared order: enumeration must follow it.
  Eigen::RowVectorXd entry(2);
  entry << 1, 0;
  Eigen::VectorXd final(2);
  final << 0, 1;
  Eigen::MatrixXd ta(2, 2), tb(2, 2);
  ta << 1, 0, 1, 0;
  tb << 0, 1, 0, 1;
  WeightedAutomaton reversed(SemiringKind::Boolean, "ba", entry, final,
                             {tb, ta});
  auto tr = genaut::behavior(reversed, 1);
  CHECK(tr.words == std::vector<genaut::Word>{"", "b", "a"});
}

TEST_CASE("behavior: table sizes follow the geometric count") {
  auto t2 = genaut::behavior(ends_in_b(), 4);        // k = 2
  CHECK(t2.words.size() == (1u << 5) - 1);           // (2^5 - 1)/(2 - 1)
  Eigen::RowVectorXd entry(1);
  entry << 1;
  Eigen::VectorXd final(1);
  final << 1;
  WeightedAutomaton single(SemiringKind::Real, "a", entry, final,
                           {Eigen::MatrixXd::Constant(1, 1, 0.5)});
  CHECK(genaut::behavior(single, 4).words.size() == 5);  // L + 1 for k = 1
}

TEST_CASE("behavior guards its bounds") {
  CHECK_THROWS_AS(genaut::behavior(ends_in_b(), -1), genaut::ParameterError);
  CHECK_THROWS_AS(genaut::behavior(ends_in_b(), 30), genaut::ParameterError);
}

TEST_CASE("vectorize: single-state concatenation") {
  Eigen::RowVectorXd entry(1);
  entry << 1;
  Eigen::VectorXd final(1);
  final << 1;
  WeightedAutomaton a(SemiringKind::Real, "a", entry, final,
                      {Eigen::MatrixXd::Constant(1, 1, 0.5)});
  Eigen::VectorXd v = genaut::vectorize(a);
  Eigen::VectorXd expected(3);
  expected << 1, 1, 0.5;
  CHECK(v == expected);
}

TEST_CASE("vectorize: strategy automaton has dimension 12") {
  Eigen::VectorXd v = genaut::vectorize(uniform_strategy());
  CHECK(v.size() == 12);  // k n^2 + 2n with n = 2, k = 2
  for (Eigen::Index i = 0; i < v.size(); ++i) CHECK(v(i) == 0.5);
}

TEST_CASE("vectorize layout is entry, final, then row-major matrices") {
  WeightedAutomaton a = genaut::build_strategy({1, 1, 0, 1, 1, 1}).core();
  Eigen::VectorXd v = genaut::vectorize(a);
  Eigen::VectorXd expected(12);
  // entry (1,0) | final (1,0) | trans(C) rows (1,0),(0,1) | trans(D) rows (0,1),(0,1)
  expected << 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1;
  CHECK(v == expected);
}

TEST_CASE("automaton_from_vector inverts vectorize bit-for-bit") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 3, "ab", -2.0, 2.0);
    Eigen::VectorXd v = genaut::vectorize(a);
    auto b = genaut::automaton_from_vector(SemiringKind::Real, "ab", 3, v);
    CHECK(genaut::vectorize(b) == v);
    CHECK(b.entry() == a.entry());
    CHECK(b.final() == a.final());
    CHECK(b.trans('a') == a.trans('a'));
    CHECK(b.trans('b') == a.trans('b'));
  }
  Eigen::VectorXd bad(11);
  bad.setZero();
  CHECK_THROWS_AS(
      genaut::automaton_from_vector(SemiringKind::Real, "ab", 2, bad),
      genaut::ShapeError);
}

TEST_CASE("automaton_distance basics") {
  std::mt19937_64 rng(29);
  auto a = testsupport::random_real_automaton(rng, 2, "ab");
  CHECK(genaut::automaton_distance(a, a, 2.0) == 0.0);

  // one transition coefficient nudged by 0.25: 1-norm distance is 0.25
  std::vector<Eigen::MatrixXd> trans = a.trans();
  trans[0](1, 0) += 0.25;
  WeightedAutomaton b(SemiringKind::Real, a.alphabet(), a.entry(), a.final(),
                      trans);
  CHECK(genaut::automaton_distance(a, b, 1.0) ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("automaton_distance is a symmetric pseudometric") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 3, "ab");
    auto b = testsupport::random_real_automaton(rng, 3, "ab");
    auto c = testsupport::random_real_automaton(rng, 3, "ab");
    for (double alpha : {1.0, 2.0}) {
      double ab = genaut::automaton_distance(a, b, alpha);
      double ba = genaut::automaton_distance(b, a, alpha);
      double ac = genaut::automaton_distance(a, c, alpha);
      double cb = genaut::automaton_distance(c, b, alpha);
      CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
      CHECK(ab <= ac + cb + 1e-9);
    }
  }
}

TEST_CASE("automaton_distance rejects incomparable operands") {
  std::mt19937_64 rng(37);
  auto a = testsupport::random_real_automaton(rng, 2, "ab");
  auto b = testsupport::random_real_automaton(rng, 3, "ab");
  auto c = testsupport::random_real_automaton(rng, 2, "xy");
  CHECK_THROWS_AS(genaut::automaton_distance(a, b, 2.0),
                  genaut::ComparabilityError);
  CHECK_THROWS_AS(genaut::automaton_distance(a, c, 2.0),
                  genaut::ComparabilityError);
  auto boolean = testsupport::random_boolean_automaton(rng, 2, "ab");
  CHECK_THROWS_AS(genaut::automaton_distance(a, boolean, 2.0),
                  genaut::ComparabilityError);
}

TEST_CASE("behavior_gap basics") {
  WeightedAutomaton half = uniform_strategy();
  WeightedAutomaton one = genaut::build_strategy({1, 1, 1, 1, 1, 1}).core();
  CHECK(genaut::behavior_gap(half, half, 3, 2.0) == 0.0);
  CHECK(genaut::behavior_gap(half, one, 0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  std::mt19937_64 rng(41);
  auto other_alphabet = testsupport::random_real_automaton(rng, 2, "ab");
  CHECK_THROWS_AS(genaut::behavior_gap(half, other_alphabet, 2, 2.0),
                  genaut::ComparabilityError);
}

TEST_CASE("behavior_gap compares automata of different state counts") {
  std::mt19937_64 rng(43);
  auto small = testsupport::random_real_automaton(rng, 2, "ab");
  auto large = testsupport::random_real_automaton(rng, 4, "ab");
  CHECK_NOTHROW(genaut::behavior_gap(small, large, 3, 2.0));
}

TEST_CASE("behavior_gap is nondecreasing in the truncation length") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 2, "ab");
    auto b = testsupport::random_real_automaton(rng, 2, "ab");
    double prev = 0.0;
    for (int len = 0; len <= 4; ++len) {
      double gap = genaut::behavior_gap(a, b, len, 1.0);
      CHECK(gap >= prev - 1e-12);
      prev = gap;
    }
  }
}

TEST_CASE("perturbations shrink the truncated behavior gap") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = testsupport::random_real_automaton(rng, 2, "ab");
    Eigen::VectorXd v = genaut::vectorize(a);
    Eigen::VectorXd dir(v.size());
    for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = u(rng);
    dir /= dir.cwiseAbs().sum();
    auto perturbed = [&](double eps) {
      return genaut::automaton_from_vector(SemiringKind::Real, "ab", 2,
                                           Eigen::VectorXd(v + eps * dir));
    };
    double g2 = genaut::behavior_gap(a, perturbed(1e-2), 4, 1.0);
    double g3 = genaut::behavior_gap(a, perturbed(1e-3), 4, 1.0);
    CHECK(g3 < g2);
  }
}

TEST_CASE("is_stochastic") {
  CHECK(genaut::is_stochastic(uniform_strategy()));
  CHECK_FALSE(genaut::is_stochastic(ends_in_b()));
  std::mt19937_64 rng(59);
  auto a = testsupport::random_real_automaton(rng, 2, "ab");
  CHECK_FALSE(genaut::is_stochastic(a));  // unnormalized rows almost surely
  std::vector<Eigen::MatrixXd> trans = uniform_strategy().trans();
  trans[0](0, 0) += 1e-6;
  WeightedAutomaton skew(SemiringKind::Real, "CD", uniform_strategy().entry(),
                         uniform_strategy().final(), trans);
  CHECK_FALSE(genaut::is_stochastic(skew));
  CHECK(genaut::is_stochastic(skew, 1e-5));
}

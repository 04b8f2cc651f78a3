#include <gtest/gtest.h>

#include <random>

#include "einf/foundations.hpp"
#include "oracles.hpp"

using namespace einf;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::parse_error;
}

}  // namespace

TEST(Surjection, ValidatesWorkedExample) {
  const Surjection u = validate_surjection({1, 2, 3, 1, 2}, 3);
  EXPECT_EQ(u.arity(), 3);
  EXPECT_EQ(u.degree(), 2);
}

TEST(Surjection, RejectsBadWords) {
  EXPECT_EQ(code_of([] { validate_surjection({1, 1, 2}, 2); }), ErrorCode::degenerate);
  EXPECT_EQ(code_of([] { validate_surjection({1, 3, 1}, 3); }), ErrorCode::not_surjective);
  EXPECT_EQ(code_of([] { validate_surjection({1, 4, 2}, 3); }), ErrorCode::out_of_range);
  EXPECT_EQ(code_of([] { validate_surjection({}, 2); }), ErrorCode::out_of_range);
  EXPECT_EQ(code_of([] { validate_surjection({1}, 0); }), ErrorCode::out_of_range);
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
  EXPECT_THROW(Permutation(Word{}), Error);
}

TEST(Multiplicities, Examples) {
  EXPECT_EQ(multiplicities(validate_surjection({1, 2, 3, 1, 2}, 3)).counts, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(multiplicities(as_surjection(Permutation({2, 1}))).counts, (std::vector<int>{1, 1}));
  EXPECT_EQ(multiplicities(validate_surjection({1, 2, 1, 2}, 2)).counts, (std::vector<int>{2, 2}));
}

TEST(Caesura, Examples) {
  EXPECT_EQ(caesura_sequence(validate_surjection({1, 2, 3, 1, 2}, 3)), (Word{1, 2}));
  EXPECT_TRUE(caesura_sequence(as_surjection(Permutation({3, 1, 2}))).empty());
  EXPECT_EQ(caesura_sequence(validate_surjection({2, 1, 2, 1}, 2)), (Word{2, 1}));
}

TEST(Caesura, MultisetMatchesMultiplicities) {
  for (int r = 1; r <= 4; ++r)
    for (int d = 0; d <= 4; ++d)
      for (const Word& w : oracle::surjection_words(r, d)) {
        const Surjection u = validate_surjection(w, r);
        const Word c = caesura_sequence(u);
        ASSERT_EQ(static_cast<int>(c.size()), d);
        const Multiplicities m = multiplicities(u);
        for (Letter k = 1; k <= r; ++k) EXPECT_EQ(std::count(c.begin(), c.end(), k), m[k] - 1);
      }
}

TEST(DeleteOccurrence, Examples) {
  const Surjection u = validate_surjection({1, 2, 3, 1, 2}, 3);
  EXPECT_EQ(delete_occurrence(u, 1, 1), (Word{1, 2, 3, 2}));
  const Surjection v = validate_surjection({1, 2, 1}, 2);
  EXPECT_EQ(delete_occurrence(v, 2, 0), (Word{1, 1}));
  EXPECT_EQ(classify_word(delete_occurrence(v, 2, 0), 2), WordKind::not_surjective);
  EXPECT_EQ(delete_occurrence(v, 1, 0), (Word{2, 1}));
  EXPECT_EQ(code_of([&] { delete_occurrence(v, 2, 1); }), ErrorCode::no_such_occurrence);
  EXPECT_EQ(code_of([&] { delete_occurrence(v, 1, -1); }), ErrorCode::no_such_occurrence);
}

TEST(DeleteOccurrence, ReinsertionRestoresWord) {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 3; ++d)
      for (const Word& w : oracle::surjection_words(r, d)) {
        const Surjection u = validate_surjection(w, r);
        const Multiplicities m = multiplicities(u);
        for (Letter k = 1; k <= r; ++k)
          for (int x = 0; x < m[k]; ++x) {
            Word back = delete_occurrence(u, k, x);
            const int pos = occurrence_position(u, k, x);
            back.insert(back.begin() + pos, k);
            EXPECT_EQ(back, w);
          }
      }
}

TEST(Relabel, Examples) {
  const Permutation swap({2, 1});
  EXPECT_EQ(relabel(swap, validate_surjection({1, 2, 1}, 2)).word(), (Word{2, 1, 2}));
  const Surjection u = validate_surjection({1, 2, 3, 1, 2}, 3);
  EXPECT_EQ(relabel(Permutation::identity(3), u), u);
  EXPECT_EQ(relabel(Permutation({2, 3, 1}), Permutation::identity(3)), Permutation({2, 3, 1}));
  EXPECT_THROW(relabel(swap, u), Error);
}

TEST(Relabel, IsAGroupAction) {
  std::mt19937 rng(17);
  for (int r = 1; r <= 4; ++r)
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation v = oracle::random_permutation(r, rng);
      const Permutation w = oracle::random_permutation(r, rng);
      const Surjection u = oracle::random_surjection(r, r == 1 ? 0 : trial % 5, rng);
      EXPECT_EQ(relabel(v, relabel(w, u)), relabel(compose(v, w), u));
      EXPECT_EQ(relabel(Permutation::identity(r), u), u);
      EXPECT_EQ(compose(w, w.inverse()), Permutation::identity(r));
    }
}

TEST(Permutation, AllPermutationsLexicographic) {
  const auto p = all_permutations(4);
  ASSERT_EQ(p.size(), 24u);
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  EXPECT_EQ(p.front(), Permutation::identity(4));
}

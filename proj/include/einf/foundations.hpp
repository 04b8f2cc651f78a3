#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "einf/error.hpp"

namespace einf {

// Letters are 1-based values in {1..r}.
using Letter = int;
using Word = std::vector<Letter>;

/// An element of the symmetric group on {1..r}, stored as its value word
/// (w(1), ..., w(r)).
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `word` lists every value of {1..word.size()} once.
  explicit Permutation(Word word);

  static Permutation identity(int arity);

  int arity() const noexcept { return static_cast<int>(word_.size()); }
  const Word& word() const noexcept { return word_; }
  Letter operator()(Letter value) const { return word_[value - 1]; }

  /// 0-based position of `value` inside the word.
  int position_of(Letter value) const;

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  Word word_;
};

/// (v ∘ w)(a) = v(w(a)).
Permutation compose(const Permutation& v, const Permutation& w);

/// All r! permutations in lexicographic order of their words.
std::vector<Permutation> all_permutations(int arity);

/// Per-value occurrence counts (d_1, ..., d_r) of a surjection.
struct Multiplicities {
  std::vector<int> counts;

  int operator[](Letter k) const { return counts[k - 1]; }
  int total() const;
  int arity() const noexcept { return static_cast<int>(counts.size()); }

  bool operator==(const Multiplicities&) const = default;
};

enum class WordKind { valid, degenerate, not_surjective, out_of_range };

/// Classification of a raw word against the surjection invariants. Range is
/// checked first, then surjectivity, then adjacent repetition.
WordKind classify_word(std::span<const Letter> word, int arity);

/// A nondegenerate surjection {1..r+d} -> {1..r}, i.e. a basis element of
/// the surjection complex in degree d.
class Surjection {
 public:
  Surjection() = default;

  int arity() const noexcept { return arity_; }
  int degree() const noexcept { return static_cast<int>(word_.size()) - arity_; }
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  /// 0-based positions of the occurrences of `k`, increasing.
  std::vector<int> occurrences(Letter k) const;

  // Ordering: arity, then lexicographic on the word (so shorter words of the
  // same arity compare by prefix first).
  auto operator<=>(const Surjection&) const = default;

 private:
  friend Surjection validate_surjection(Word word, int arity);
  Surjection(Word word, int arity) : arity_(arity), word_(std::move(word)) {}

  int arity_ = 0;
  Word word_;
};

/// Throws Error{out_of_range | not_surjective | degenerate}.
Surjection validate_surjection(Word word, int arity);

/// A permutation is a degree-0 surjection.
Surjection as_surjection(const Permutation& w);

Multiplicities multiplicities(const Surjection& u);

/// The word with the last occurrence of each value removed. Length = degree.
Word caesura_sequence(const Surjection& u);

/// Removes the (x+1)-th occurrence of `k`. Throws no_such_occurrence.
Word delete_occurrence(const Surjection& u, Letter k, int x);

/// Position (0-based) in u.word() of the (x+1)-th occurrence of k.
int occurrence_position(const Surjection& u, Letter k, int x);

// Symmetric-group action by value relabeling: every letter v becomes w(v).
Permutation relabel(const Permutation& w, const Permutation& target);
Surjection relabel(const Permutation& w, const Surjection& target);

}  // namespace einf

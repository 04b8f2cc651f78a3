#include "einf/foundations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace einf {

namespace {

std::string word_text(std::span<const Letter> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

void require_same_arity(int a, int b) {
  if (a != b)
    throw Error(ErrorCode::arity_mismatch,
                "permutation of arity " + std::to_string(a) + " acting on arity " + std::to_string(b));
}

}  // namespace

Permutation::Permutation(Word word) : word_(std::move(word)) {
  const int r = static_cast<int>(word_.size());
  if (r == 0) throw Error(ErrorCode::out_of_range, "empty permutation");
  std::vector<bool> seen(r + 1, false);
  for (Letter v : word_) {
    if (v < 1 || v > r)
      throw Error(ErrorCode::out_of_range, "letter " + std::to_string(v) + " in permutation " + word_text(word_));
    if (seen[v]) throw Error(ErrorCode::not_surjective, "repeated letter in permutation " + word_text(word_));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int arity) {
  Word w(arity);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::position_of(Letter value) const {
  auto it = std::find(word_.begin(), word_.end(), value);
  return static_cast<int>(it - word_.begin());
}

Permutation Permutation::inverse() const {
  Word inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<Letter>(i + 1);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& v, const Permutation& w) {
  require_same_arity(v.arity(), w.arity());
  Word out(w.arity());
  for (int a = 1; a <= w.arity(); ++a) out[a - 1] = v(w(a));
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int arity) {
  std::vector<Permutation> out;
  Word w(arity);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int Multiplicities::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

WordKind classify_word(std::span<const Letter> word, int arity) {
  std::vector<bool> seen(arity + 1, false);
  for (Letter v : word) {
    if (v < 1 || v > arity) return WordKind::out_of_range;
    seen[v] = true;
  }
  for (int k = 1; k <= arity; ++k)
    if (!seen[k]) return WordKind::not_surjective;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return WordKind::degenerate;
  return WordKind::valid;
}

Surjection validate_surjection(Word word, int arity) {
  if (arity < 1) throw Error(ErrorCode::out_of_range, "arity must be positive");
  if (word.empty()) throw Error(ErrorCode::out_of_range, "empty surjection word");
  switch (classify_word(word, arity)) {
    case WordKind::out_of_range:
      throw Error(ErrorCode::out_of_range, "letter outside 1.." + std::to_string(arity) + " in " + word_text(word));
    case WordKind::not_surjective:
      throw Error(ErrorCode::not_surjective, "a value of 1.." + std::to_string(arity) + " is missing in " + word_text(word));
    case WordKind::degenerate:
      throw Error(ErrorCode::degenerate, "adjacent repetition in " + word_text(word));
    case WordKind::valid:
      break;
  }
  return Surjection(std::move(word), arity);
}

Surjection as_surjection(const Permutation& w) { return validate_surjection(w.word(), w.arity()); }

std::vector<int> Surjection::occurrences(Letter k) const {
  std::vector<int> pos;
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] == k) pos.push_back(static_cast<int>(i));
  return pos;
}

Multiplicities multiplicities(const Surjection& u) {
  Multiplicities m{std::vector<int>(u.arity(), 0)};
  for (Letter v : u.word()) ++m.counts[v - 1];
  return m;
}

Word caesura_sequence(const Surjection& u) {
  std::vector<int> last(u.arity() + 1, -1);
  const Word& w = u.word();
  for (std::size_t i = 0; i < w.size(); ++i) last[w[i]] = static_cast<int>(i);
  Word out;
  out.reserve(w.size() - u.arity());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (last[w[i]] != static_cast<int>(i)) out.push_back(w[i]);
  return out;
}

int occurrence_position(const Surjection& u, Letter k, int x) {
  if (k < 1 || k > u.arity())
    throw Error(ErrorCode::no_such_occurrence, "value " + std::to_string(k) + " outside the arity");
  int seen = 0;
  const Word& w = u.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != k) continue;
    if (seen == x) return static_cast<int>(i);
    ++seen;
  }
  throw Error(ErrorCode::no_such_occurrence,
              "occurrence " + std::to_string(x) + " of " + std::to_string(k) + " in " + word_text(w));
}

Word delete_occurrence(const Surjection& u, Letter k, int x) {
  if (x < 0) throw Error(ErrorCode::no_such_occurrence, "negative occurrence index");
  const int pos = occurrence_position(u, k, x);
  Word out = u.word();
  out.erase(out.begin() + pos);
  return out;
}

Permutation relabel(const Permutation& w, const Permutation& target) {
  require_same_arity(w.arity(), target.arity());
  Word out(target.word());
  for (Letter& v : out) v = w(v);
  return Permutation(std::move(out));
}

Surjection relabel(const Permutation& w, const Surjection& target) {
  require_same_arity(w.arity(), target.arity());
  Word out(target.word());
  for (Letter& v : out) v = w(v);
  return validate_surjection(std::move(out), target.arity());
}

}  // namespace einf

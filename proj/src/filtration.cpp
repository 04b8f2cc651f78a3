#include "einf/filtration.hpp"

#include <algorithm>

namespace einf {

int pair_index(int arity, Letter i, Letter j) {
  if (i > j) std::swap(i, j);
  // Pairs (1,2..r), (2,3..r), ...: row i starts after Σ_{a<i} (r - a).
  return (i - 1) * (2 * arity - i) / 2 + (j - i - 1);
}

int ComplexityMatrix::max_entry() const {
  return entries_.empty() ? 1 : *std::max_element(entries_.begin(), entries_.end());
}

namespace {

// Two-letter restriction of u with adjacent repeats collapsed.
std::vector<Letter> reduced_pair_word(const Surjection& u, Letter i, Letter j) {
  std::vector<Letter> red;
  for (Letter v : u.word()) {
    if (v != i && v != j) continue;
    if (red.empty() || red.back() != v) red.push_back(v);
  }
  return red;
}

}  // namespace

ComplexityMatrix complexity(const Surjection& u) {
  ComplexityMatrix m(u.arity());
  for (Letter i = 1; i <= u.arity(); ++i)
    for (Letter j = i + 1; j <= u.arity(); ++j)
      m.set(i, j, static_cast<int>(reduced_pair_word(u, i, j).size()) - 1);
  return m;
}

ComplexityMatrix complexity(const Simplex& s) {
  ComplexityMatrix m(s.arity());
  for (Letter i = 1; i <= s.arity(); ++i)
    for (Letter j = i + 1; j <= s.arity(); ++j) {
      int changes = 0;
      bool prev = s.vertex(0).position_of(i) < s.vertex(0).position_of(j);
      for (int t = 1; t <= s.dimension(); ++t) {
        const bool cur = s.vertex(t).position_of(i) < s.vertex(t).position_of(j);
        changes += cur != prev;
        prev = cur;
      }
      m.set(i, j, 1 + changes);
    }
  return m;
}

CellDescriptor cell_descriptor(const Surjection& u) {
  CellDescriptor cell{complexity(u), {}};
  for (Letter i = 1; i <= u.arity(); ++i)
    for (Letter j = i + 1; j <= u.arity(); ++j) {
      const auto red = reduced_pair_word(u, i, j);
      cell.i_before_j.push_back(red[red.size() - 2] == i);
    }
  return cell;
}

CellDescriptor cell_descriptor(const Simplex& s) {
  CellDescriptor cell{complexity(s), {}};
  const Permutation& last = s.vertex(s.dimension());
  for (Letter i = 1; i <= s.arity(); ++i)
    for (Letter j = i + 1; j <= s.arity(); ++j) cell.i_before_j.push_back(last.position_of(i) < last.position_of(j));
  return cell;
}

bool cell_leq(const CellDescriptor& a, const CellDescriptor& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::arity_mismatch, "cells of different arities");
  const auto& ma = a.mu.entries();
  const auto& mb = b.mu.entries();
  for (std::size_t p = 0; p < ma.size(); ++p) {
    if (ma[p] < mb[p]) continue;
    if (ma[p] == mb[p] && a.i_before_j[p] == b.i_before_j[p]) continue;
    return false;
  }
  return true;
}

bool in_filtration(const Surjection& u, int level) { return complexity(u).max_entry() <= level; }
bool in_filtration(const Simplex& s, int level) { return complexity(s).max_entry() <= level; }

}  // namespace einf

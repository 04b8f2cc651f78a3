#pragma once

#include <vector>

#include "einf/chains_e.hpp"
#include "einf/foundations.hpp"

namespace einf {

/// Pairs {i, j}, i < j, are indexed in the order (1,2), (1,3), ..., (r-1,r).
int pair_index(int arity, Letter i, Letter j);

/// Complexity c_ij ≥ 1 for every pair of values.
class ComplexityMatrix {
 public:
  ComplexityMatrix() = default;
  explicit ComplexityMatrix(int arity) : arity_(arity), entries_(arity * (arity - 1) / 2, 1) {}

  int arity() const noexcept { return arity_; }
  int at(Letter i, Letter j) const { return entries_[pair_index(arity_, i, j)]; }
  void set(Letter i, Letter j, int c) { entries_[pair_index(arity_, i, j)] = c; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  /// 1 for arity 1 (no pairs).
  int max_entry() const;

  bool operator==(const ComplexityMatrix&) const = default;

 private:
  int arity_ = 0;
  std::vector<int> entries_;
};

struct CellDescriptor {
  ComplexityMatrix mu;
  // i_before_j[pair_index(i, j)] for i < j: orientation of the pair at the end.
  std::vector<bool> i_before_j;

  int arity() const noexcept { return mu.arity(); }
  bool operator==(const CellDescriptor&) const = default;
};

/// Length of the two-letter restriction of u (adjacent repeats collapsed) minus 1.
ComplexityMatrix complexity(const Surjection& u);
/// 1 + number of orientation changes of each pair along the vertices.
ComplexityMatrix complexity(const Simplex& s);

CellDescriptor cell_descriptor(const Surjection& u);
CellDescriptor cell_descriptor(const Simplex& s);

/// a ≤ b iff every pair has a.mu < b.mu, or equal mu and equal orientation.
/// Throws arity_mismatch.
bool cell_leq(const CellDescriptor& a, const CellDescriptor& b);

bool in_filtration(const Surjection& u, int level);
bool in_filtration(const Simplex& s, int level);

}  // namespace einf

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "einf/chain.hpp"
#include "einf/foundations.hpp"

namespace einf {

/// A tuple (w_0, ..., w_n) of permutations of one arity: an n-simplex of the
/// homogeneous bar construction. Degenerate tuples are representable (faces
/// and degeneracies produce them) but vanish in normalized chains.
class Simplex {
 public:
  Simplex() = default;
  /// Throws arity_mismatch if the vertices disagree on arity, or
  /// index_out_of_range if there are none.
  explicit Simplex(std::vector<Permutation> vertices);

  int arity() const noexcept { return vertices_.front().arity(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Permutation>& vertices() const noexcept { return vertices_; }
  const Permutation& vertex(int i) const { return vertices_[i]; }

  bool is_degenerate() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Permutation> vertices_;
};

inline int basis_arity(const Simplex& s) { return s.arity(); }
inline int basis_degree(const Simplex& s) { return s.dimension(); }
inline bool basis_vanishes(const Simplex& s) { return s.is_degenerate(); }

using EChain = LinearCombination<Simplex>;

/// d_i: omit vertex i. The result may be degenerate.
Simplex face(const Simplex& s, int i);

/// s_j: repeat vertex j.
Simplex degeneracy(const Simplex& s, int j);

/// Concatenation (v_0..v_p, w_0..w_q).
Simplex concatenate(const Simplex& a, const Simplex& b);

/// sum_i (-1)^i d_i, degenerate faces dropped.
EChain boundary_e(const Simplex& s);
EChain boundary_e(const EChain& c);

/// Diagonal action on every vertex.
Simplex relabel(const Permutation& w, const Simplex& s);
EChain relabel(const Permutation& w, const EChain& c);

/// r! (r! - 1)^n, saturating at UINT64_MAX.
std::uint64_t simplex_count(int arity, int dimension);

/// Every nondegenerate n-simplex in lexicographic order. Throws
/// resource_exceeded when the count passes `limit`.
std::vector<Simplex> enumerate_simplices(int arity, int dimension, std::uint64_t limit = 5'000'000);

}  // namespace einf

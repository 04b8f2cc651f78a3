#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "einf/chain.hpp"

namespace einf {

/// Sparse integer matrix stored by columns; each column is sorted by row.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Coefficient>>> columns;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
};

/// Nonzero invariant factors of the Smith normal form, ascending.
std::vector<Coefficient> smith_invariant_factors(const IntegerMatrix& m);

/// Rank over Z/p. Equals the rational rank unless p divides some invariant factor.
int rank_mod_prime(const IntegerMatrix& m, std::uint64_t p = 2147483647ULL);

/// Finitely generated abelian group Z^rank ⊕ Z/t_1 ⊕ ... (t_i > 1, ascending).
struct AbelianGroup {
  int rank = 0;
  std::vector<Coefficient> torsion;

  bool operator==(const AbelianGroup&) const = default;
};

/// "0", "Z", "Z^3", "Z + Z/2", ...
std::string to_string(const AbelianGroup& g);

/// Homology of a complex given by its group ranks n_0..n_{D+1} and boundary
/// matrices ∂_k : C_k -> C_{k-1} for k = 1..D+1 (boundaries[k-1]). Degrees 0..D.
std::vector<AbelianGroup> homology_from_boundaries(const std::vector<int>& group_ranks,
                                                   const std::vector<IntegerMatrix>& boundaries);

enum class Space { e, x };

/// Integer homology in degrees 0..max_degree of E(r) or X(r), or of the
/// subcomplex F_n when `filtration_level` is set.
std::vector<AbelianGroup> homology(Space space, int arity, int max_degree,
                                   std::optional<int> filtration_level = std::nullopt,
                                   std::uint64_t basis_limit = 5'000'000);

/// Betti numbers computed with ranks modulo a prime; cross-check for `homology`.
std::vector<int> betti_mod_prime(Space space, int arity, int max_degree,
                                 std::optional<int> filtration_level = std::nullopt,
                                 std::uint64_t basis_limit = 5'000'000);

}  // namespace einf

#pragma once

#include <optional>
#include <vector>

#include "einf/chains_e.hpp"
#include "einf/foundations.hpp"

namespace einf {

/// A vertex (x_1, ..., x_r) of Δ^{d_1-1} × ... × Δ^{d_r-1}; 0 ≤ x_k < d_k.
struct VertexCoord {
  std::vector<int> coords;

  int operator[](Letter k) const { return coords[k - 1]; }
  auto operator<=>(const VertexCoord&) const = default;
};

/// Step sequence (k_0, ..., k_{d-1}) of a saturated monotone lattice path
/// through the prism; encodes one maximal simplex.
struct LatticePath {
  std::vector<Letter> steps;

  auto operator<=>(const LatticePath&) const = default;
};

/// Permutation read off the positions of the (x_k+1)-th occurrences.
/// Throws coord_out_of_range.
Permutation vertex_permutation(const Surjection& u, const VertexCoord& x);

/// All vertices of the prism in lexicographic coordinate order.
std::vector<VertexCoord> prism_vertices(const Surjection& u);

/// d! / prod (d_k - 1)!, saturating.
std::uint64_t maximal_path_count(const Surjection& u);

/// In lexicographic step order.
std::vector<LatticePath> enumerate_maximal_paths(const Surjection& u, std::uint64_t limit = 5'000'000);

/// Throws path_invalid unless every k appears exactly d_k - 1 times.
void check_path(const Surjection& u, const LatticePath& p);

/// Image of the maximal simplex with vertices x^(0) = 0, x^(i+1) = x^(i) + e_{k_i}.
/// May be degenerate.
Simplex path_to_simplex(const Surjection& u, const LatticePath& p);

Simplex fundamental_simplex(const Surjection& u);

/// (-1)^(number of inversions of the step sequence).
int path_sign(const LatticePath& p);

/// ε(u): sign of the caesura path.
int orientation_sign(const Surjection& u);

enum class FaceKind { valid, degenerate, not_surjective };

struct PrismFace {
  FaceKind kind;
  Word word;
  std::optional<Surjection> surjection;  // set iff kind == valid
};

/// Face of τ_u obtained by dropping the (x+1)-th occurrence of k.
/// Throws factor_is_point when d_k = 1, no_such_occurrence when x ≥ d_k.
PrismFace prism_face(const Surjection& u, Letter k, int x);

/// True iff some componentwise weakly increasing chain of prism vertices maps
/// onto the vertices of `s`.
bool simplex_in_prism(const Simplex& s, const Surjection& u);

/// First surjection (by length, then word) with all d_k ≤ bound whose prism
/// contains `s`. Throws resource_exceeded past `candidate_limit` candidates.
std::optional<Surjection> covering_surjection(const Simplex& s, int bound,
                                              std::uint64_t candidate_limit = 50'000'000);

}  // namespace einf

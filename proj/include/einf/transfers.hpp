#pragma once

#include <functional>

#include "einf/chains_e.hpp"
#include "einf/complex_x.hpp"

namespace einf {

/// Signed sum of the maximal simplices of τ_u; the fundamental simplex has
/// coefficient +1.
EChain tc(const Surjection& u);
EChain tc(const XChain& c);

/// Table reduction of a simplex: one term per composition of r+d into d+1
/// positive parts, dropping words with an adjacent repetition.
XChain table_reduction(const Simplex& s);
XChain tr(const EChain& c);

/// A degree-preserving linear self-map of E(r), given on basis simplices.
using ChainSelfMap = std::function<EChain(const Simplex&)>;

/// s ↦ tc(tr(s)).
EChain tc_after_tr(const Simplex& s);

/// Prefix-coning homotopy: sum_i (-1)^(i+1) (T(w_0..w_i), w_i, ..., w_d).
/// With T identity in degree 0 it satisfies T = Id + δH + Hδ.
/// Throws degree_mismatch if T changes degree on a prefix.
EChain homotopy_h(const Simplex& s, const ChainSelfMap& t);
EChain homotopy_h(const EChain& c, const ChainSelfMap& t);

}  // namespace einf

#pragma once

#include <cstdint>
#include <vector>

#include "einf/chain.hpp"
#include "einf/foundations.hpp"

namespace einf {

inline int basis_arity(const Surjection& u) { return u.arity(); }
inline int basis_degree(const Surjection& u) { return u.degree(); }
inline bool basis_vanishes(const Surjection&) { return false; }

using XChain = LinearCombination<Surjection>;

enum class SignRule {
  orientation,  // ε(u) ε(v) (-1)^(x + Σ_{l<k} (d_l - 1))
  no_koszul,    // drops the tensor-factor term; broken on purpose, for harness self-tests
};

/// Sign with which deleting the (x+1)-th occurrence of k from u contributes v.
int boundary_sign(const Surjection& u, const Surjection& v, Letter k, int x,
                  SignRule rule = SignRule::orientation);

XChain boundary_x(const Surjection& u, SignRule rule = SignRule::orientation);
XChain boundary_x(const XChain& c, SignRule rule = SignRule::orientation);

XChain relabel(const Permutation& w, const XChain& c);

/// Number of nondegenerate surjections, by inclusion-exclusion over the
/// values used. Saturates at UINT64_MAX.
std::uint64_t surjection_count(int arity, int degree);

/// Every nondegenerate surjection of the given arity and degree, in
/// lexicographic word order.
std::vector<Surjection> enumerate_surjections(int arity, int degree, std::uint64_t limit = 5'000'000);

}  // namespace einf

#include "einf/complex_x.hpp"

#include <limits>
#include <string>

#include "einf/prisms.hpp"

namespace einf {

int boundary_sign(const Surjection& u, const Surjection& v, Letter k, int x, SignRule rule) {
  const Multiplicities m = multiplicities(u);
  int exponent = x;
  if (rule == SignRule::orientation)
    for (Letter l = 1; l < k; ++l) exponent += m[l] - 1;
  const int koszul = (exponent % 2 == 0) ? 1 : -1;
  return orientation_sign(u) * orientation_sign(v) * koszul;
}

XChain boundary_x(const Surjection& u, SignRule rule) {
  XChain out(u.arity(), u.degree() - 1);
  if (u.degree() == 0) return out;
  const Multiplicities m = multiplicities(u);
  for (Letter k = 1; k <= u.arity(); ++k) {
    if (m[k] < 2) continue;
    for (int x = 0; x < m[k]; ++x) {
      PrismFace f = prism_face(u, k, x);
      if (f.kind != FaceKind::valid) continue;
      out.add(*f.surjection, boundary_sign(u, *f.surjection, k, x, rule));
    }
  }
  return out;
}

XChain boundary_x(const XChain& c, SignRule rule) {
  return extend_linearly<Surjection>(c, c.arity(), c.degree() - 1,
                                     [rule](const Surjection& u) { return boundary_x(u, rule); });
}

XChain relabel(const Permutation& w, const XChain& c) {
  XChain out(c.arity(), c.degree());
  for (const auto& [u, coeff] : c.terms()) out.add(relabel(w, u), coeff);
  return out;
}

std::uint64_t surjection_count(int arity, int degree) {
  if (arity < 1 || degree < 0) return 0;
  const int length = arity + degree;
  // Σ_j (-1)^(r-j) C(r,j) j (j-1)^(L-1)
  __int128 total = 0;
  __int128 binom = 1;
  for (int j = 1; j <= arity; ++j) {
    binom = binom * (arity - j + 1) / j;
    __int128 term = binom * j;
    for (int i = 0; i < length - 1; ++i) {
      term *= (j - 1);
      if (term > (static_cast<__int128>(1) << 100)) return std::numeric_limits<std::uint64_t>::max();
    }
    total += ((arity - j) % 2 == 0) ? term : -term;
  }
  if (total > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

std::vector<Surjection> enumerate_surjections(int arity, int degree, std::uint64_t limit) {
  if (arity < 1 || degree < 0) throw Error(ErrorCode::out_of_range, "arity ≥ 1 and degree ≥ 0 required");
  const std::uint64_t count = surjection_count(arity, degree);
  if (count > limit)
    throw Error(ErrorCode::resource_exceeded, std::to_string(count) + " surjections exceed the limit");
  std::vector<Surjection> out;
  out.reserve(count);
  const int length = arity + degree;
  Word word(length, 0);
  std::vector<int> used(arity + 1, 0);
  int distinct = 0;

  // Lexicographic DFS; prune when the unused values no longer fit.
  auto extend = [&](auto&& self, int pos) -> void {
    if (pos == length) {
      out.push_back(validate_surjection(word, arity));
      return;
    }
    for (Letter v = 1; v <= arity; ++v) {
      if (pos > 0 && word[pos - 1] == v) continue;
      const bool fresh = used[v] == 0;
      if (arity - distinct - (fresh ? 1 : 0) > length - pos - 1) continue;
      word[pos] = v;
      ++used[v];
      distinct += fresh;
      self(self, pos + 1);
      distinct -= fresh;
      --used[v];
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace einf

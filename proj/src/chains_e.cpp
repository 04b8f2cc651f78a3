#include "einf/chains_e.hpp"

#include <limits>
#include <string>

namespace einf {

Simplex::Simplex(std::vector<Permutation> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::index_out_of_range, "simplex needs at least one vertex");
  for (const auto& v : vertices_)
    if (v.arity() != vertices_.front().arity())
      throw Error(ErrorCode::arity_mismatch, "simplex vertices of different arities");
}

bool Simplex::is_degenerate() const {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1]) return true;
  return false;
}

static void check_index(const Simplex& s, int i, const char* what) {
  if (i < 0 || i > s.dimension())
    throw Error(ErrorCode::index_out_of_range,
                std::string(what) + " index " + std::to_string(i) + " on a " + std::to_string(s.dimension()) +
                    "-simplex");
}

Simplex face(const Simplex& s, int i) {
  check_index(s, i, "face");
  if (s.dimension() == 0) throw Error(ErrorCode::index_out_of_range, "a vertex has no faces");
  std::vector<Permutation> v = s.vertices();
  v.erase(v.begin() + i);
  return Simplex(std::move(v));
}

Simplex degeneracy(const Simplex& s, int j) {
  check_index(s, j, "degeneracy");
  std::vector<Permutation> v = s.vertices();
  v.insert(v.begin() + j, v[j]);
  return Simplex(std::move(v));
}

Simplex concatenate(const Simplex& a, const Simplex& b) {
  std::vector<Permutation> v = a.vertices();
  v.insert(v.end(), b.vertices().begin(), b.vertices().end());
  return Simplex(std::move(v));
}

EChain boundary_e(const Simplex& s) {
  const int n = s.dimension();
  EChain out(s.arity(), n - 1);
  if (n == 0) return out;
  for (int i = 0; i <= n; ++i) out.add(face(s, i), (i % 2 == 0) ? 1 : -1);
  return out;
}

EChain boundary_e(const EChain& c) {
  return extend_linearly<Simplex>(c, c.arity(), c.degree() - 1, [](const Simplex& s) { return boundary_e(s); });
}

Simplex relabel(const Permutation& w, const Simplex& s) {
  std::vector<Permutation> v;
  v.reserve(s.vertices().size());
  for (const auto& p : s.vertices()) v.push_back(relabel(w, p));
  return Simplex(std::move(v));
}

EChain relabel(const Permutation& w, const EChain& c) {
  EChain out(c.arity(), c.degree());
  for (const auto& [s, coeff] : c.terms()) out.add(relabel(w, s), coeff);
  return out;
}

std::uint64_t simplex_count(int arity, int dimension) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t fact = 1;
  for (int i = 2; i <= arity; ++i) {
    if (fact > cap / i) return cap;
    fact *= i;
  }
  std::uint64_t count = fact;
  for (int i = 0; i < dimension; ++i) {
    if (fact - 1 == 0) return 0;
    if (count > cap / (fact - 1)) return cap;
    count *= fact - 1;
  }
  return count;
}

std::vector<Simplex> enumerate_simplices(int arity, int dimension, std::uint64_t limit) {
  if (arity < 1 || dimension < 0) throw Error(ErrorCode::out_of_range, "arity ≥ 1 and dimension ≥ 0 required");
  const std::uint64_t count = simplex_count(arity, dimension);
  if (count > limit)
    throw Error(ErrorCode::resource_exceeded, std::to_string(count) + " simplices exceed the limit " +
                                                  std::to_string(limit));
  const std::vector<Permutation> perms = all_permutations(arity);
  const int m = static_cast<int>(perms.size());
  std::vector<Simplex> out;
  out.reserve(count);
  if (dimension > 0 && m == 1) return out;

  // Odometer over vertex indices; digit i ranges over all m permutations
  // except the one chosen at i-1, kept in lexicographic order.
  std::vector<int> idx(dimension + 1, 0);
  for (int i = 1; i <= dimension; ++i) idx[i] = (idx[i - 1] == 0) ? 1 : 0;
  for (;;) {
    std::vector<Permutation> v;
    v.reserve(dimension + 1);
    for (int i : idx) v.push_back(perms[i]);
    out.emplace_back(std::move(v));

    int pos = dimension;
    for (; pos >= 0; --pos) {
      int next = idx[pos] + 1;
      if (pos > 0 && next == idx[pos - 1]) ++next;
      if (next < m) {
        idx[pos] = next;
        break;
      }
    }
    if (pos < 0) break;
    for (int i = pos + 1; i <= dimension; ++i) idx[i] = (idx[i - 1] == 0) ? 1 : 0;
  }
  return out;
}

}  // namespace einf

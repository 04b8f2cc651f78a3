#pragma once

// Brute-force references used only by tests. Nothing here calls the code
// path it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "einf/chains_e.hpp"
#include "einf/complex_x.hpp"
#include "einf/foundations.hpp"

namespace einf::oracle {

/// Every word of length r+d over {1..r}, filtered by the surjection rules.
inline std::vector<Word> surjection_words(int r, int d) {
  std::vector<Word> out;
  const int len = r + d;
  Word w(len, 1);
  for (;;) {
    bool ok = true;
    std::vector<bool> seen(r + 1, false);
    for (int i = 0; i < len; ++i) {
      seen[w[i]] = true;
      if (i && w[i] == w[i - 1]) ok = false;
    }
    for (int k = 1; k <= r; ++k) ok = ok && seen[k];
    if (ok) out.push_back(w);
    int p = len - 1;
    while (p >= 0 && w[p] == r) w[p--] = 1;
    if (p < 0) break;
    ++w[p];
  }
  return out;
}

/// Every (n+1)-tuple of permutations, keeping the nondegenerate ones.
inline std::vector<std::vector<Permutation>> simplex_tuples(int r, int n) {
  std::vector<Permutation> perms;
  Word base(r);
  for (int i = 0; i < r; ++i) base[i] = i + 1;
  do perms.emplace_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::vector<std::vector<Permutation>> out;
  std::vector<std::size_t> idx(n + 1, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && idx[i] != idx[i + 1];
    if (ok) {
      std::vector<Permutation> t;
      for (auto i : idx) t.push_back(perms[i]);
      out.push_back(std::move(t));
    }
    int p = n;
    while (p >= 0 && idx[p] + 1 == perms.size()) idx[p--] = 0;
    if (p < 0) break;
    ++idx[p];
  }
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Sign of a permutation of {0..n-1} by cycle decomposition.
inline int cycle_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Eilenberg-Zilber shuffle sign of a step sequence: step i of factor k is
/// sent to the next free slot of block k (blocks of size d_k - 1, in order);
/// the sign is that of time -> slot.
inline int shuffle_sign(const std::vector<int>& steps, const std::vector<int>& block_sizes) {
  std::vector<int> next(block_sizes.size(), 0);
  int acc = 0;
  for (std::size_t k = 0; k < block_sizes.size(); ++k) {
    next[k] = acc;
    acc += block_sizes[k];
  }
  std::vector<int> perm;
  for (int k : steps) perm.push_back(next[k - 1]++);
  return cycle_sign(perm);
}

/// Vertex map read directly from the definition: mark the chosen occurrence
/// of each value, then scan the word once.
inline Word vertex_word(const Word& u, const std::vector<int>& x) {
  std::vector<int> seen(x.size() + 1, 0);
  Word out;
  for (Letter v : u) {
    if (seen[v] == x[v - 1]) out.push_back(v);
    ++seen[v];
  }
  return out;
}

/// TC from the product-of-simplices definition: walk every chain of
/// coordinate vectors increasing by one unit step at a time.
inline std::map<std::vector<Word>, long long> tc_by_walks(const Word& u, int r) {
  std::vector<int> mult(r, 0);
  for (Letter v : u) ++mult[v - 1];
  std::vector<int> blocks(r);
  for (int k = 0; k < r; ++k) blocks[k] = mult[k] - 1;
  const int d = static_cast<int>(u.size()) - r;

  // Caesura steps: non-final occurrences in word order.
  std::vector<int> caes;
  {
    std::vector<int> remaining = mult;
    for (Letter v : u)
      if (--remaining[v - 1] > 0) caes.push_back(v);
  }
  const int eps = shuffle_sign(caes, blocks);

  std::map<std::vector<Word>, long long> out;
  std::vector<int> x(r, 0), steps;
  std::vector<Word> verts{vertex_word(u, x)};
  auto walk = [&](auto&& self) -> void {
    if (static_cast<int>(steps.size()) == d) {
      for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (verts[i] == verts[i + 1]) return;
      out[verts] += eps * shuffle_sign(steps, blocks);
      return;
    }
    for (int k = 1; k <= r; ++k) {
      if (x[k - 1] + 1 >= mult[k - 1]) continue;
      ++x[k - 1];
      steps.push_back(k);
      verts.push_back(vertex_word(u, x));
      self(self);
      verts.pop_back();
      steps.pop_back();
      --x[k - 1];
    }
  };
  walk(walk);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Dense Gaussian elimination modulo p.
inline int dense_rank_mod(std::vector<std::vector<long long>> a, long long p = 1000000007LL) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto norm = [p](long long v) { return ((v % p) + p) % p; };
  auto inv = [&](long long v) {
    long long r = 1, b = v, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
      b = static_cast<long long>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& v : row) v = norm(v);
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long long iv = inv(a[rank][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
      const long long f = static_cast<long long>(static_cast<__int128>(a[i][c]) * iv % p);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = norm(a[i][j] - static_cast<long long>(static_cast<__int128>(f) * a[rank][j] % p));
    }
    ++rank;
  }
  return rank;
}

inline Permutation random_permutation(int r, std::mt19937& rng) {
  Word w(r);
  for (int i = 0; i < r; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

inline Surjection random_surjection(int r, int d, std::mt19937& rng) {
  if (r == 1 && d > 0) throw std::invalid_argument("no surjection of arity 1 in positive degree");
  for (;;) {
    Word w(r + d);
    std::uniform_int_distribution<int> pick(1, r);
    for (auto& v : w) v = pick(rng);
    if (classify_word(w, r) == WordKind::valid) return validate_surjection(w, r);
  }
}

inline Simplex random_simplex(int r, int n, std::mt19937& rng) {
  if (r == 1 && n > 0) throw std::invalid_argument("no nondegenerate simplex of arity 1 in positive degree");
  std::vector<Permutation> v{random_permutation(r, rng)};
  while (static_cast<int>(v.size()) <= n) {
    Permutation p = random_permutation(r, rng);
    if (p != v.back()) v.push_back(p);
  }
  return Simplex(v);
}

}  // namespace einf::oracle

#include "einf/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "einf/chains_e.hpp"
#include "einf/complex_x.hpp"
#include "einf/filtration.hpp"

namespace einf {

namespace {

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::resource_exceeded, "integer overflow in elimination");
  return out;
}

Coefficient checked_sub(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::resource_exceeded, "integer overflow in elimination");
  return out;
}

struct IntegerRing {
  bool is_unit(Coefficient v) const { return v == 1 || v == -1; }
  Coefficient normalize(Coefficient v) const { return v; }
  // Multiplier c with a - c * pivot = 0, pivot a unit.
  Coefficient quotient(Coefficient a, Coefficient pivot) const { return checked_mul(a, pivot); }
  Coefficient sub_mul(Coefficient x, Coefficient c, Coefficient y) const { return checked_sub(x, checked_mul(c, y)); }
};

struct PrimeField {
  std::uint64_t p;

  bool is_unit(Coefficient v) const { return v != 0; }
  Coefficient normalize(Coefficient v) const {
    const auto m = static_cast<Coefficient>(p);
    v %= m;
    return v < 0 ? v + m : v;
  }
  Coefficient mul(Coefficient a, Coefficient b) const {
    return static_cast<Coefficient>(static_cast<unsigned __int128>(a) * static_cast<std::uint64_t>(b) % p);
  }
  Coefficient inverse(Coefficient a) const {
    Coefficient result = 1, base = a;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Coefficient quotient(Coefficient a, Coefficient pivot) const { return mul(a, inverse(pivot)); }
  Coefficient sub_mul(Coefficient x, Coefficient c, Coefficient y) const {
    return normalize(x - mul(c, y));
  }
};

// Column-sparse working copy. A unit pivot at (i, j) clears row i from every
// other column by column operations; afterwards row i and column j can be
// dropped without changing the remaining invariant factors.
template <class Ring>
class UnitEliminator {
 public:
  UnitEliminator(const IntegerMatrix& m, Ring ring)
      : ring_(ring), cols_(m.cols), row_cols_(m.rows), alive_(m.cols, true) {
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [i, v] : m.columns[j]) {
        const Coefficient nv = ring_.normalize(v);
        if (nv == 0) continue;
        cols_[j][i] = nv;
        row_cols_[i].insert(j);
      }
  }

  /// Number of pivots eliminated.
  int run() {
    int pivots = 0;
    for (;;) {
      int best_col = -1, best_row = -1;
      std::size_t best_cost = SIZE_MAX;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (!alive_[j] || cols_[j].empty()) continue;
        for (const auto& [i, v] : cols_[j]) {
          if (!ring_.is_unit(v)) continue;
          const std::size_t cost = (cols_[j].size() - 1) * (row_cols_[i].size() - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best_col = static_cast<int>(j);
            best_row = i;
          }
        }
        if (best_cost == 0) break;
      }
      if (best_col < 0) return pivots;
      pivot(best_row, best_col);
      ++pivots;
    }
  }

  /// Remaining nonzero part as a dense matrix.
  std::vector<std::vector<Coefficient>> residue() const {
    std::vector<int> live_cols;
    std::set<int> live_rows;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!alive_[j] || cols_[j].empty()) continue;
      live_cols.push_back(static_cast<int>(j));
      for (const auto& [i, v] : cols_[j]) live_rows.insert(i);
    }
    std::map<int, int> row_pos;
    for (int i : live_rows) row_pos.emplace(i, static_cast<int>(row_pos.size()));
    std::vector<std::vector<Coefficient>> dense(row_pos.size(), std::vector<Coefficient>(live_cols.size(), 0));
    for (std::size_t c = 0; c < live_cols.size(); ++c)
      for (const auto& [i, v] : cols_[live_cols[c]]) dense[row_pos[i]][c] = v;
    return dense;
  }

 private:
  void pivot(int row, int col) {
    const Coefficient pv = cols_[col].at(row);
    const std::vector<int> others(row_cols_[row].begin(), row_cols_[row].end());
    for (int k : others) {
      if (k == col) continue;
      const Coefficient c = ring_.quotient(cols_[k].at(row), pv);
      for (const auto& [i, v] : cols_[col]) {
        auto it = cols_[k].find(i);
        const Coefficient old = it == cols_[k].end() ? 0 : it->second;
        const Coefficient next = ring_.sub_mul(old, c, v);
        if (next == 0) {
          if (it != cols_[k].end()) cols_[k].erase(it);
          row_cols_[i].erase(k);
        } else if (it == cols_[k].end()) {
          cols_[k].emplace(i, next);
          row_cols_[i].insert(k);
        } else {
          it->second = next;
        }
      }
    }
    for (const auto& [i, v] : cols_[col]) row_cols_[i].erase(col);
    cols_[col].clear();
    alive_[col] = false;
  }

  Ring ring_;
  std::vector<std::map<int, Coefficient>> cols_;
  std::vector<std::set<int>> row_cols_;
  std::vector<bool> alive_;
};

// Dense Smith normal form; returns |diagonal| entries that are nonzero.
std::vector<Coefficient> dense_smith(std::vector<std::vector<Coefficient>> a) {
  std::vector<Coefficient> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block moves to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Coefficient q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Coefficient q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] = checked_sub(a[t][jj], -a[i][jj]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace

std::vector<Coefficient> smith_invariant_factors(const IntegerMatrix& m) {
  UnitEliminator<IntegerRing> elim(m, IntegerRing{});
  const int units = elim.run();
  std::vector<Coefficient> factors(units, 1);
  for (Coefficient f : dense_smith(elim.residue())) factors.push_back(f);
  std::sort(factors.begin(), factors.end());
  return factors;
}

int rank_mod_prime(const IntegerMatrix& m, std::uint64_t p) {
  UnitEliminator<PrimeField> elim(m, PrimeField{p});
  return elim.run();
}

std::string to_string(const AbelianGroup& g) {
  std::string out;
  if (g.rank == 1) out = "Z";
  else if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
  for (Coefficient t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::vector<AbelianGroup> homology_from_boundaries(const std::vector<int>& group_ranks,
                                                   const std::vector<IntegerMatrix>& boundaries) {
  const int top = static_cast<int>(group_ranks.size()) - 2;  // D
  std::vector<std::vector<Coefficient>> factors(boundaries.size());
  for (std::size_t k = 0; k < boundaries.size(); ++k) factors[k] = smith_invariant_factors(boundaries[k]);
  auto rank_of = [&](int k) -> int {  // rank of ∂_k
    if (k < 1 || k > static_cast<int>(boundaries.size())) return 0;
    return static_cast<int>(factors[k - 1].size());
  };
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= top; ++k) {
    AbelianGroup g;
    g.rank = group_ranks[k] - rank_of(k) - rank_of(k + 1);
    if (k + 1 <= static_cast<int>(boundaries.size()))
      for (Coefficient f : factors[k])
        if (f > 1) g.torsion.push_back(f);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

template <class Basis>
struct ComplexData {
  std::vector<int> group_ranks;
  std::vector<IntegerMatrix> boundaries;
};

template <class Basis, class Enumerate, class Boundary>
ComplexData<Basis> build_complex(int max_degree, std::optional<int> level, Enumerate enumerate,
                                 Boundary boundary) {
  std::vector<std::vector<Basis>> bases;
  for (int d = 0; d <= max_degree + 1; ++d) {
    std::vector<Basis> all = enumerate(d);
    if (level) std::erase_if(all, [&](const Basis& b) { return !in_filtration(b, *level); });
    bases.push_back(std::move(all));
  }
  ComplexData<Basis> data;
  for (const auto& b : bases) data.group_ranks.push_back(static_cast<int>(b.size()));
  for (int d = 1; d <= max_degree + 1; ++d) {
    std::map<Basis, int> index;
    for (std::size_t i = 0; i < bases[d - 1].size(); ++i) index.emplace(bases[d - 1][i], static_cast<int>(i));
    IntegerMatrix m(static_cast<int>(bases[d - 1].size()), static_cast<int>(bases[d].size()));
    for (std::size_t j = 0; j < bases[d].size(); ++j) {
      const auto image = boundary(bases[d][j]);
      // Faces of filtered elements stay in the filtration.
      for (const auto& [face, c] : image.terms()) m.columns[j].emplace_back(index.at(face), c);
    }
    data.boundaries.push_back(std::move(m));
  }
  return data;
}

template <class F>
auto with_complex(Space space, int arity, int max_degree, std::optional<int> level, std::uint64_t limit, F&& f) {
  if (arity < 1 || max_degree < 0) throw Error(ErrorCode::out_of_range, "arity ≥ 1 and max degree ≥ 0 required");
  if (level && *level < 1) throw Error(ErrorCode::out_of_range, "filtration level must be ≥ 1");
  if (space == Space::e) {
    auto data = build_complex<Simplex>(
        max_degree, level, [&](int d) { return enumerate_simplices(arity, d, limit); },
        [](const Simplex& s) { return boundary_e(s); });
    return f(data.group_ranks, data.boundaries);
  }
  auto data = build_complex<Surjection>(
      max_degree, level, [&](int d) { return enumerate_surjections(arity, d, limit); },
      [](const Surjection& u) { return boundary_x(u); });
  return f(data.group_ranks, data.boundaries);
}

}  // namespace

std::vector<AbelianGroup> homology(Space space, int arity, int max_degree, std::optional<int> filtration_level,
                                   std::uint64_t basis_limit) {
  return with_complex(space, arity, max_degree, filtration_level, basis_limit,
                      [](const std::vector<int>& ranks, const std::vector<IntegerMatrix>& bds) {
                        return homology_from_boundaries(ranks, bds);
                      });
}

std::vector<int> betti_mod_prime(Space space, int arity, int max_degree, std::optional<int> filtration_level,
                                 std::uint64_t basis_limit) {
  return with_complex(space, arity, max_degree, filtration_level, basis_limit,
                      [max_degree](const std::vector<int>& ranks, const std::vector<IntegerMatrix>& bds) {
                        std::vector<int> r(bds.size() + 2, 0);
                        for (std::size_t k = 0; k < bds.size(); ++k) r[k + 1] = rank_mod_prime(bds[k]);
                        std::vector<int> betti;
                        for (int k = 0; k <= max_degree; ++k) betti.push_back(ranks[k] - r[k] - r[k + 1]);
                        return betti;
                      });
}

}  // namespace einf

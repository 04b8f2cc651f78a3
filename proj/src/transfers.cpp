#include "einf/transfers.hpp"

#include <string>

#include "einf/prisms.hpp"

namespace einf {

EChain tc(const Surjection& u) {
  EChain out(u.arity(), u.degree());
  const int eps = orientation_sign(u);
  for (const LatticePath& p : enumerate_maximal_paths(u)) out.add(path_to_simplex(u, p), eps * path_sign(p));
  return out;
}

EChain tc(const XChain& c) {
  return extend_linearly<Simplex>(c, c.arity(), c.degree(), [](const Surjection& u) { return tc(u); });
}

namespace {

// Enumerates compositions (parts[0], ..., parts[d]) of `total` with positive
// parts, in lexicographic order, and assembles the row-filled word for each.
class TableReducer {
 public:
  explicit TableReducer(const Simplex& s)
      : s_(s), r_(s.arity()), d_(s.dimension()), parts_(d_ + 1), out_(r_, d_) {}

  XChain run() {
    if (s_.is_degenerate()) return out_;
    choose(0, r_ + d_);
    return std::move(out_);
  }

 private:
  void choose(int row, int remaining) {
    if (row == d_) {
      parts_[row] = remaining;
      assemble();
      return;
    }
    // Leave at least one letter for each later row.
    for (int len = 1; len <= remaining - (d_ - row); ++len) {
      parts_[row] = len;
      choose(row + 1, remaining - len);
    }
  }

  void assemble() {
    std::vector<bool> final_value(r_ + 1, false);
    Word word;
    word.reserve(r_ + d_);
    for (int i = 0; i <= d_; ++i) {
      int taken = 0;
      const std::size_t row_start = word.size();
      for (Letter v : s_.vertex(i).word()) {
        if (taken == parts_[i]) break;
        if (final_value[v]) continue;
        if (!word.empty() && word.back() == v) return;  // adjacent repetition: zero term
        word.push_back(v);
        ++taken;
      }
      // The availability count r + i - Σ_{t<i} parts_t ≥ parts_i always holds.
      if (i < d_)
        for (std::size_t p = row_start; p + 1 < word.size(); ++p) final_value[word[p]] = true;
    }
    out_.add(validate_surjection(std::move(word), r_), 1);
  }

  const Simplex& s_;
  int r_;
  int d_;
  std::vector<int> parts_;
  XChain out_;
};

}  // namespace

XChain table_reduction(const Simplex& s) { return TableReducer(s).run(); }

XChain tr(const EChain& c) {
  return extend_linearly<Surjection>(c, c.arity(), c.degree(), [](const Simplex& s) { return table_reduction(s); });
}

EChain tc_after_tr(const Simplex& s) { return tc(table_reduction(s)); }

EChain homotopy_h(const Simplex& s, const ChainSelfMap& t) {
  const int d = s.dimension();
  EChain out(s.arity(), d + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<Permutation> prefix(s.vertices().begin(), s.vertices().begin() + i + 1);
    std::vector<Permutation> suffix(s.vertices().begin() + i, s.vertices().end());
    const Simplex head(std::move(prefix));
    const Simplex tail(std::move(suffix));
    const EChain image = t(head);
    if (!image.is_zero() && image.degree() != i)
      throw Error(ErrorCode::degree_mismatch, "self-map sends a " + std::to_string(i) + "-simplex to degree " +
                                                  std::to_string(image.degree()));
    const Coefficient sign = (i % 2 == 0) ? -1 : 1;
    for (const auto& [v, coeff] : image.terms()) out.add(concatenate(v, tail), sign * coeff);
  }
  return out;
}

EChain homotopy_h(const EChain& c, const ChainSelfMap& t) {
  return extend_linearly<Simplex>(c, c.arity(), c.degree() + 1, [&t](const Simplex& s) { return homotopy_h(s, t); });
}

}  // namespace einf

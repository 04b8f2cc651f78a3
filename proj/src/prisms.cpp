#include "einf/prisms.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace einf {

namespace {

// occ[k-1][x] = position of the (x+1)-th occurrence of k.
std::vector<std::vector<int>> occurrence_table(const Surjection& u) {
  std::vector<std::vector<int>> occ(u.arity());
  const Word& w = u.word();
  for (std::size_t i = 0; i < w.size(); ++i) occ[w[i] - 1].push_back(static_cast<int>(i));
  return occ;
}

Permutation read_vertex(const Surjection& u, const std::vector<std::vector<int>>& occ,
                        const std::vector<int>& coords) {
  std::vector<int> pos(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) pos[k] = occ[k][coords[k]];
  std::sort(pos.begin(), pos.end());
  Word out(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) out[i] = u.word()[pos[i]];
  return Permutation(std::move(out));
}

bool dominated(const VertexCoord& a, const VertexCoord& b) {
  for (std::size_t k = 0; k < a.coords.size(); ++k)
    if (a.coords[k] > b.coords[k]) return false;
  return true;
}

}  // namespace

Permutation vertex_permutation(const Surjection& u, const VertexCoord& x) {
  if (static_cast<int>(x.coords.size()) != u.arity())
    throw Error(ErrorCode::coord_out_of_range, "coordinate vector has the wrong length");
  const Multiplicities m = multiplicities(u);
  for (int k = 1; k <= u.arity(); ++k)
    if (x[k] < 0 || x[k] >= m[k])
      throw Error(ErrorCode::coord_out_of_range,
                  "x_" + std::to_string(k) + " = " + std::to_string(x[k]) + " with d_k = " + std::to_string(m[k]));
  return read_vertex(u, occurrence_table(u), x.coords);
}

std::vector<VertexCoord> prism_vertices(const Surjection& u) {
  const Multiplicities m = multiplicities(u);
  std::vector<VertexCoord> out;
  VertexCoord x{std::vector<int>(u.arity(), 0)};
  for (;;) {
    out.push_back(x);
    int k = u.arity() - 1;
    for (; k >= 0; --k) {
      if (++x.coords[k] < m.counts[k]) break;
      x.coords[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::uint64_t maximal_path_count(const Surjection& u) {
  // Product of binomials C(placed + c, c), each exact.
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  const Multiplicities m = multiplicities(u);
  std::uint64_t total = 1;
  int placed = 0;
  for (int c : m.counts) {
    const int steps = c - 1;
    std::uint64_t binom = 1;
    for (int i = 1; i <= steps; ++i) {
      const std::uint64_t num = static_cast<std::uint64_t>(placed + i);
      if (binom > cap / num) return cap;
      binom = binom * num / i;
    }
    if (total > cap / binom) return cap;
    total *= binom;
    placed += steps;
  }
  return total;
}

std::vector<LatticePath> enumerate_maximal_paths(const Surjection& u, std::uint64_t limit) {
  const std::uint64_t count = maximal_path_count(u);
  if (count > limit)
    throw Error(ErrorCode::resource_exceeded, std::to_string(count) + " maximal simplices exceed the limit");
  std::vector<Letter> steps = caesura_sequence(u);
  std::sort(steps.begin(), steps.end());
  std::vector<LatticePath> out;
  out.reserve(count);
  do {
    out.push_back(LatticePath{steps});
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

void check_path(const Surjection& u, const LatticePath& p) {
  const Multiplicities m = multiplicities(u);
  std::vector<int> used(u.arity(), 0);
  for (Letter k : p.steps) {
    if (k < 1 || k > u.arity()) throw Error(ErrorCode::path_invalid, "step value outside the arity");
    ++used[k - 1];
  }
  for (int k = 0; k < u.arity(); ++k)
    if (used[k] != m.counts[k] - 1)
      throw Error(ErrorCode::path_invalid, "value " + std::to_string(k + 1) + " must occur " +
                                               std::to_string(m.counts[k] - 1) + " times");
}

Simplex path_to_simplex(const Surjection& u, const LatticePath& p) {
  check_path(u, p);
  const auto occ = occurrence_table(u);
  std::vector<int> x(u.arity(), 0);
  std::vector<Permutation> vertices;
  vertices.reserve(p.steps.size() + 1);
  vertices.push_back(read_vertex(u, occ, x));
  for (Letter k : p.steps) {
    ++x[k - 1];
    vertices.push_back(read_vertex(u, occ, x));
  }
  return Simplex(std::move(vertices));
}

Simplex fundamental_simplex(const Surjection& u) { return path_to_simplex(u, LatticePath{caesura_sequence(u)}); }

int path_sign(const LatticePath& p) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < p.steps.size(); ++a)
    for (std::size_t b = a + 1; b < p.steps.size(); ++b)
      if (p.steps[a] > p.steps[b]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

int orientation_sign(const Surjection& u) { return path_sign(LatticePath{caesura_sequence(u)}); }

PrismFace prism_face(const Surjection& u, Letter k, int x) {
  if (k < 1 || k > u.arity()) throw Error(ErrorCode::no_such_occurrence, "value outside the arity");
  const Multiplicities m = multiplicities(u);
  if (m[k] == 1)
    throw Error(ErrorCode::factor_is_point, "value " + std::to_string(k) + " occurs once; its factor is a point");
  if (x < 0 || x >= m[k]) throw Error(ErrorCode::no_such_occurrence, "occurrence index out of range");
  PrismFace f{FaceKind::valid, delete_occurrence(u, k, x), std::nullopt};
  switch (classify_word(f.word, u.arity())) {
    case WordKind::valid: f.surjection = validate_surjection(f.word, u.arity()); break;
    case WordKind::degenerate: f.kind = FaceKind::degenerate; break;
    default: f.kind = FaceKind::not_surjective; break;
  }
  return f;
}

bool simplex_in_prism(const Simplex& s, const Surjection& u) {
  if (s.arity() != u.arity()) throw Error(ErrorCode::arity_mismatch, "simplex and surjection arities differ");
  const auto occ = occurrence_table(u);
  const std::vector<VertexCoord> coords = prism_vertices(u);
  std::vector<Permutation> images;
  images.reserve(coords.size());
  for (const auto& x : coords) images.push_back(read_vertex(u, occ, x.coords));

  // reachable[c]: a chain ending at coords[c] realizes the vertices so far.
  std::vector<bool> reachable(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) reachable[c] = images[c] == s.vertex(0);
  for (int i = 1; i <= s.dimension(); ++i) {
    std::vector<bool> next(coords.size(), false);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (images[c] != s.vertex(i)) continue;
      for (std::size_t b = 0; b < coords.size() && !next[c]; ++b)
        if (reachable[b] && dominated(coords[b], coords[c])) next[c] = true;
    }
    reachable = std::move(next);
  }
  return std::find(reachable.begin(), reachable.end(), true) != reachable.end();
}

namespace {

// Depth-first generation of surjection words of fixed length in
// lexicographic order, with every multiplicity ≤ bound.
class CandidateSearch {
 public:
  CandidateSearch(const Simplex& s, int bound, std::uint64_t limit)
      : s_(s), r_(s.arity()), bound_(bound), limit_(limit), counts_(r_ + 1, 0) {}

  std::optional<Surjection> run() {
    for (int length = r_; length <= r_ * bound_; ++length) {
      word_.assign(length, 0);
      if (extend(0, length)) return found_;
    }
    return std::nullopt;
  }

 private:
  bool extend(int pos, int length) {
    if (pos == length) {
      if (++visited_ > limit_) throw Error(ErrorCode::resource_exceeded, "coverage candidate limit reached");
      Surjection u = validate_surjection(word_, r_);
      if (simplex_in_prism(s_, u)) {
        found_ = std::move(u);
        return true;
      }
      return false;
    }
    for (Letter v = 1; v <= r_; ++v) {
      if (pos > 0 && word_[pos - 1] == v) continue;
      if (counts_[v] == bound_) continue;
      ++counts_[v];
      int missing = 0;
      for (int k = 1; k <= r_; ++k) missing += counts_[k] == 0;
      if (missing <= length - pos - 1) {
        word_[pos] = v;
        if (extend(pos + 1, length)) return true;
      }
      --counts_[v];
    }
    return false;
  }

  const Simplex& s_;
  int r_;
  int bound_;
  std::uint64_t limit_;
  std::uint64_t visited_ = 0;
  std::vector<int> counts_;
  Word word_;
  std::optional<Surjection> found_;
};

}  // namespace

std::optional<Surjection> covering_surjection(const Simplex& s, int bound, std::uint64_t candidate_limit) {
  if (s.is_degenerate()) throw Error(ErrorCode::degenerate, "covering search needs a nondegenerate simplex");
  if (bound < 1) throw Error(ErrorCode::out_of_range, "multiplicity bound must be positive");
  return CandidateSearch(s, bound, candidate_limit).run();
}

}  // namespace einf

#include <gtest/gtest.h>

#include <random>

#include "einf/homology.hpp"
#include "oracles.hpp"

using namespace einf;

namespace {
IntegerMatrix dense(const std::vector<std::vector<Coefficient>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r)
      if (rows[r][c] != 0) m.columns[c].emplace_back(r, rows[r][c]);
  return m;
}

AbelianGroup Zn(int n) { return {n, {}}; }
}  // namespace

TEST(Smith, SmallMatrices) {
  EXPECT_EQ(smith_invariant_factors(dense({{2}})), (std::vector<Coefficient>{2}));
  EXPECT_EQ(smith_invariant_factors(dense({{2, 0}, {0, 3}})), (std::vector<Coefficient>{1, 6}));
  EXPECT_EQ(smith_invariant_factors(dense({{2, 4}, {4, 8}})), (std::vector<Coefficient>{2}));
  EXPECT_EQ(smith_invariant_factors(dense({{0, 0}, {0, 0}})), (std::vector<Coefficient>{}));
  EXPECT_EQ(smith_invariant_factors(dense({{1, -1}, {-1, 1}})), (std::vector<Coefficient>{1}));
}

TEST(Smith, RankAgreesWithDenseOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7), cols = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<Coefficient>> a(rows, std::vector<Coefficient>(cols));
    std::vector<std::vector<long long>> b(rows, std::vector<long long>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const int v = (rng() % 3 == 0) ? static_cast<int>(rng() % 7) - 3 : 0;
        a[r][c] = v;
        b[r][c] = v;
      }
    const IntegerMatrix m = dense(a);
    const int expected = oracle::dense_rank_mod(b);
    EXPECT_EQ(static_cast<int>(smith_invariant_factors(m).size()), expected);
    EXPECT_EQ(rank_mod_prime(m), expected);
  }
}

TEST(AbelianGroupText, Formats) {
  EXPECT_EQ(to_string(Zn(0)), "0");
  EXPECT_EQ(to_string(Zn(1)), "Z");
  EXPECT_EQ(to_string(Zn(3)), "Z^3");
  EXPECT_EQ(to_string(AbelianGroup{1, {2}}), "Z + Z/2");
}

TEST(HomologyFromBoundaries, TorsionOfProjectivePlaneLike) {
  // C_1 = Z --(2)--> C_0 = Z: H_0 = Z/2, H_1 = 0.
  const auto h = homology_from_boundaries({1, 1}, {dense({{2}})});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (AbelianGroup{0, {2}}));
}

TEST(Homology, FullComplexIsContractible) {
  for (Space space : {Space::x, Space::e}) {
    const auto h2 = homology(space, 2, 2);
    EXPECT_EQ(h2, (std::vector<AbelianGroup>{Zn(1), Zn(0), Zn(0)}));
    const auto h3 = homology(space, 3, 2);
    EXPECT_EQ(h3, (std::vector<AbelianGroup>{Zn(1), Zn(0), Zn(0)}));
  }
}

TEST(Homology, ArityTwoFiltrationIsASphere) {
  for (Space space : {Space::x, Space::e}) {
    EXPECT_EQ(homology(space, 2, 1, 1), (std::vector<AbelianGroup>{Zn(2), Zn(0)}));
    EXPECT_EQ(homology(space, 2, 1, 2), (std::vector<AbelianGroup>{Zn(1), Zn(1)}));
    EXPECT_EQ(homology(space, 2, 3, 3), (std::vector<AbelianGroup>{Zn(1), Zn(0), Zn(1), Zn(0)}));
  }
}

TEST(Homology, ArityThreeFiltration) {
  for (Space space : {Space::x, Space::e}) {
    EXPECT_EQ(homology(space, 3, 0, 1), (std::vector<AbelianGroup>{Zn(6)}));
    EXPECT_EQ(homology(space, 3, 2, 2), (std::vector<AbelianGroup>{Zn(1), Zn(3), Zn(2)}));
  }
}

TEST(Homology, ModPrimeAgreesWithIntegers) {
  for (Space space : {Space::x, Space::e})
    for (int level = 1; level <= 3; ++level) {
      const auto h = homology(space, 3, 2, level);
      const auto b = betti_mod_prime(space, 3, 2, level);
      ASSERT_EQ(h.size(), b.size());
      for (std::size_t i = 0; i < h.size(); ++i) {
        EXPECT_TRUE(h[i].torsion.empty());
        EXPECT_EQ(h[i].rank, b[i]);
      }
    }
}

TEST(Homology, ResourceGuard) { EXPECT_THROW(homology(Space::e, 5, 4, std::nullopt, 1000), Error); }

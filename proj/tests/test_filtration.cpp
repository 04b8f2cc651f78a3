#include <gtest/gtest.h>

#include "einf/codec.hpp"
#include "einf/filtration.hpp"
#include "einf/transfers.hpp"

using namespace einf;

namespace {
Surjection U(const char* text) { return decode_surjection(text); }
Simplex S(const char* text) { return decode_simplex(text); }

template <class Basis>
void expect_below(const LinearCombination<Basis>& image, const CellDescriptor& bound) {
  for (const auto& [b, c] : image.terms()) EXPECT_TRUE(cell_leq(cell_descriptor(b), bound)) << encode(b);
}
}  // namespace

TEST(PairIndex, Enumerates) {
  int expected = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(pair_index(5, i, j), expected++);
  EXPECT_EQ(pair_index(5, 4, 2), pair_index(5, 2, 4));
}

TEST(Complexity, SurjectionExamples) {
  EXPECT_EQ(complexity(U("1,2,1")).at(1, 2), 2);
  EXPECT_EQ(complexity(U("1,2,1,2")).at(1, 2), 3);
  for (const Permutation& w : all_permutations(4)) {
    const ComplexityMatrix m = complexity(as_surjection(w));
    for (int c : m.entries()) EXPECT_EQ(c, 1);
  }
  const ComplexityMatrix m3 = complexity(U("1,2,3,1,2"));
  EXPECT_EQ(m3.at(1, 2), 3);
  EXPECT_EQ(m3.at(1, 3), 2);
  EXPECT_EQ(m3.at(2, 3), 2);
}

TEST(Complexity, SimplexExamples) {
  EXPECT_EQ(complexity(S("1,2;2,1")).at(1, 2), 2);
  EXPECT_EQ(complexity(S("1,2;2,1;1,2")).at(1, 2), 3);
  const ComplexityMatrix m = complexity(S("3,1,2"));
  for (int c : m.entries()) EXPECT_EQ(c, 1);
}

TEST(CellDescriptor, Examples) {
  const CellDescriptor a = cell_descriptor(U("1,2,1"));
  EXPECT_EQ(a.mu.at(1, 2), 2);
  EXPECT_FALSE(a.i_before_j[0]);  // ends "2 then 1"
  const CellDescriptor b = cell_descriptor(S("1,2;2,1"));
  EXPECT_EQ(b, a);
  const CellDescriptor v = cell_descriptor(S("2,3,1"));
  EXPECT_FALSE(v.i_before_j[pair_index(3, 1, 2)]);
  EXPECT_FALSE(v.i_before_j[pair_index(3, 1, 3)]);
  EXPECT_TRUE(v.i_before_j[pair_index(3, 2, 3)]);
}

TEST(CellLeq, Examples) {
  const CellDescriptor a = cell_descriptor(U("1,2,1"));
  EXPECT_TRUE(cell_leq(a, a));
  EXPECT_TRUE(cell_leq(cell_descriptor(U("1,2")), a));
  EXPECT_FALSE(cell_leq(cell_descriptor(S("1,2;2,1")), cell_descriptor(U("2,1,2"))));
  EXPECT_THROW(cell_leq(a, cell_descriptor(U("1,2,3"))), Error);
}

TEST(InFiltration, Examples) {
  for (const Permutation& w : all_permutations(3)) EXPECT_TRUE(in_filtration(as_surjection(w), 1));
  EXPECT_TRUE(in_filtration(U("1,2,1"), 2));
  EXPECT_FALSE(in_filtration(U("1,2,1"), 1));
  EXPECT_TRUE(in_filtration(U("1,2,1,2"), 3));
  EXPECT_FALSE(in_filtration(U("1,2,1,2"), 2));
  EXPECT_TRUE(in_filtration(S("1,2;2,1"), 2));
  EXPECT_TRUE(in_filtration(U("1"), 1));
}

TEST(Filtration, DifferentialsAndTransfersPreserveCells) {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 3; ++d) {
      for (const Surjection& u : enumerate_surjections(r, d)) {
        const CellDescriptor cell = cell_descriptor(u);
        expect_below(boundary_x(u), cell);
        expect_below(tc(u), cell);
        EXPECT_EQ(cell_descriptor(fundamental_simplex(u)), cell) << encode(u);
      }
      for (const Simplex& s : enumerate_simplices(r, d)) {
        const CellDescriptor cell = cell_descriptor(s);
        expect_below(boundary_e(s), cell);
        expect_below(table_reduction(s), cell);
        expect_below(homotopy_h(s, tc_after_tr), cell);
      }
    }
}

TEST(Filtration, NestedAndExhaustive) {
  for (int d = 0; d <= 3; ++d)
    for (const Surjection& u : enumerate_surjections(3, d)) {
      const int top = complexity(u).max_entry();
      EXPECT_TRUE(in_filtration(u, top));
      for (int n = top; n <= top + 3; ++n) EXPECT_TRUE(in_filtration(u, n));
      if (top > 1) EXPECT_FALSE(in_filtration(u, top - 1));
    }
}

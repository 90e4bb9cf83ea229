#include <gtest/gtest.h>

#include <map>
#include <set>

#include "kjdt/enumerate.hpp"
#include "kjdt/io.hpp"
#include "kjdt/products.hpp"

using namespace kjdt;

namespace {

IncreasingTableau grid(const std::string& text) { return parse_increasing(text); }

// Classical product: U northeast of T, then ordinary jeu de taquin into the
// boxes of the inner rectangle, last box first.
IncreasingTableau classical_product(const IncreasingTableau& t, const IncreasingTableau& u) {
  const int w = t.shape().outer().width();
  const int h = u.shape().outer().length();
  std::map<Box, int> cells;
  for (const auto& [b, v] : u.entries()) cells[{b.row, b.col + w}] = v;
  for (const auto& [b, v] : t.entries()) cells[{b.row + h, b.col}] = v;
  for (int r = h; r >= 1; --r)
    for (int c = w; c >= 1; --c) {
      Box hole{r, c};
      while (true) {
        auto right = cells.find({hole.row, hole.col + 1});
        auto below = cells.find({hole.row + 1, hole.col});
        if (right == cells.end() && below == cells.end()) break;
        auto next = right;
        if (right == cells.end() || (below != cells.end() && below->second < right->second)) next = below;
        const Box from = next->first;
        cells[hole] = next->second;
        cells.erase(from);
        hole = from;
      }
    }
  std::map<int, std::vector<int>> rows;
  for (const auto& [b, v] : cells) rows[b.row].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, row] : rows) out.push_back(row);
  return IncreasingTableau::straight(out);
}

// Standard tableaux of every shape of size n, entries drawn from `values`.
std::vector<IncreasingTableau> standard_on(const std::vector<int>& values) {
  std::vector<IncreasingTableau> out;
  const int n = static_cast<int>(values.size());
  for (const auto& shape : partitions_of(n))
    for (const auto& t : enumerate_increasing(SkewShape(shape, Partition()), alphabet_upto(n), true)) {
      std::vector<std::vector<int>> rows = t.rows();
      for (auto& row : rows)
        for (int& v : row) v = values[static_cast<std::size_t>(v - 1)];
      out.push_back(IncreasingTableau::straight(rows));
    }
  return out;
}

}  // namespace

TEST(Odot, DisplayedProducts) {
  const auto t = grid("1 2 3/2 4 5");
  EXPECT_EQ(odot(t, grid("1 2")), grid("1 2 3/2 3 5/4 5"));
  EXPECT_EQ(odot(odot(t, grid("1")), grid("2")), grid("1 2 3/2 3 5/4"));
}

TEST(Odot, EmptyFactors) {
  const auto t = grid("1 2 3/2 4 5");
  EXPECT_EQ(odot(t, IncreasingTableau()), t);
  EXPECT_EQ(odot(IncreasingTableau(), t), t);
}

TEST(Odot, NotAssociative) {
  const auto t = grid("1 2 3/2 4 5");
  const auto one = grid("1");
  const auto two = grid("2");
  EXPECT_NE(odot(odot(t, one), two), odot(t, odot(one, two)));
}

TEST(Odot, RejectsSkewInputs) {
  EXPECT_THROW(odot(grid(". 1"), grid("1")), ShapeError);
  EXPECT_THROW(diamond(grid("1"), grid(". 1")), ShapeError);
}

TEST(Odot, AgreesWithClassicalProductOnStandardInputs) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b + a <= 6; ++b) {
      // disjoint value sets in every interleaving
      for (int mask = 0; mask < (1 << (a + b)); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != a) continue;
        std::vector<int> left, right;
        for (int i = 0; i < a + b; ++i) (mask >> i & 1 ? left : right).push_back(i + 1);
        for (const auto& t : standard_on(left))
          for (const auto& u : standard_on(right))
            EXPECT_EQ(odot(t, u), classical_product(t, u)) << format_tableau(t) << " | " << format_tableau(u);
      }
    }
}

TEST(HeckeInsertion, SmallCases) {
  EXPECT_EQ(hecke_insert(IncreasingTableau(), 1), grid("1"));
  EXPECT_EQ(hecke_insert(grid("1"), 1), grid("1"));
  EXPECT_EQ(hecke_insert(grid("1"), 2), grid("1 2"));
  EXPECT_EQ(hecke_insert(grid("2"), 1), grid("1/2"));
}

TEST(HeckeInsertion, ValuesStayInTheUnion) {
  for (const auto& z : enumerate_increasing(SkewShape(Partition({2, 1}), Partition()), alphabet_upto(4), false))
    for (int x = 1; x <= 5; ++x) {
      const auto r = hecke_insert(z, x);
      const auto values = z.values();
      std::set<int> allowed(values.begin(), values.end());
      allowed.insert(x);
      for (int v : r.values()) EXPECT_TRUE(allowed.count(v)) << format_tableau(z) << " <- " << x;
      EXPECT_TRUE(r.shape().is_straight());
    }
}

TEST(Diamond, FoldsInsertionOverTheReadingWord) {
  const auto t = grid("1 2 3/2 4 5");
  EXPECT_EQ(diamond(t, grid("1 2")), grid("1 2 3/2 3 5/4"));
  EXPECT_EQ(diamond(t, IncreasingTableau()), t);
  EXPECT_NE(diamond(t, grid("1 2")), odot(t, grid("1 2")));
  const auto w = grid("1 3/2");
  auto folded = t;
  for (int x : row_reading_word(w)) folded = hecke_insert(folded, x);
  EXPECT_EQ(diamond(t, w), folded);
}

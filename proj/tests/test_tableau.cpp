#include <gtest/gtest.h>

#include <set>

#include "kjdt/enumerate.hpp"
#include "kjdt/io.hpp"
#include "kjdt/tableau.hpp"

using namespace kjdt;

namespace {

bool increasing(const std::map<Box, int>& cells) {
  for (const auto& [b, v] : cells) {
    if (auto it = cells.find({b.row, b.col + 1}); it != cells.end() && it->second <= v) return false;
    if (auto it = cells.find({b.row + 1, b.col}); it != cells.end() && it->second <= v) return false;
  }
  return true;
}

// Every map boxes -> alphabet, filtered.
std::set<IncreasingTableau> naive_increasing(const SkewShape& shape, int m, bool surjective) {
  const auto boxes = shape.boxes();
  std::set<IncreasingTableau> out;
  std::vector<int> digits(boxes.size(), 1);
  while (true) {
    std::map<Box, int> cells;
    for (std::size_t i = 0; i < boxes.size(); ++i) cells[boxes[i]] = digits[i];
    std::set<int> used(digits.begin(), digits.end());
    if (increasing(cells) && (!surjective || static_cast<int>(used.size()) == m || (boxes.empty() && m == 0))) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
      for (const auto& [b, v] : cells) rows[static_cast<std::size_t>(b.row - 1)].push_back(v);
      out.insert(IncreasingTableau(shape, rows));
    }
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == m) digits[i++] = 1;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return out;
}

// Counts the set-valued fillings, checking the rules on each one.
std::size_t checked_set_valued(const Partition& nu, const std::vector<int>& content) {
  std::size_t count = 0;
  for_each_set_valued(nu, content, [&](const SetValuedTableau& t) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const auto& cell = rows[r][c];
        EXPECT_FALSE(cell.empty());
        EXPECT_TRUE(std::is_sorted(cell.begin(), cell.end()));
        if (c > 0) EXPECT_LE(rows[r][c - 1].back(), cell.front());
        if (r > 0) EXPECT_LT(rows[r - 1][c].back(), cell.front());
      }
    EXPECT_EQ(t.content(), content);
    ++count;
  });
  return count;
}

}  // namespace

TEST(IncreasingTableau, ValidatesRowsAndColumns) {
  EXPECT_NO_THROW(IncreasingTableau::straight({{1, 2}, {2}}));
  EXPECT_THROW(IncreasingTableau::straight({{1, 1}}), TableauError);
  EXPECT_THROW(IncreasingTableau::straight({{1, 2}, {1}}), TableauError);
  EXPECT_THROW(IncreasingTableau::straight({{0}}), TableauError);
  EXPECT_THROW(IncreasingTableau(SkewShape(Partition({2}), Partition({1})), {{1, 2}}), TableauError);
}

TEST(IncreasingTableau, FromGridSkipsInnerCells) {
  const auto t = IncreasingTableau::from_grid(Partition({2, 1}), {{0, 0, 1, 2}, {0, 2, 3}, {2, 3}});
  EXPECT_EQ(t.shape().outer(), Partition({4, 3, 2}));
  EXPECT_EQ(t.at({1, 3}), 1);
  EXPECT_EQ(t.at({3, 1}), 2);
  EXPECT_EQ(t.values(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(t.max_entry(), 3);
  EXPECT_EQ(t.size(), 6);
}

TEST(Superstandard, RowsAreConsecutive) {
  const auto s = superstandard(Partition({3, 2, 1}));
  EXPECT_EQ(s, IncreasingTableau::straight({{1, 2, 3}, {4, 5}, {6}}));
  EXPECT_TRUE(is_superstandard(s));
  EXPECT_FALSE(is_superstandard(IncreasingTableau::straight({{1, 2, 3}, {2, 5}, {6}})));
  EXPECT_FALSE(is_superstandard(IncreasingTableau::straight({{1, 3}, {2}})));
  EXPECT_TRUE(is_superstandard(superstandard(Partition())));
}

TEST(AugmentedTableau, MarksSitOnRemovableCorners) {
  const auto a = parse_augmented(". . 1 2 X/. 1 X/2 4");
  EXPECT_EQ(a.marks(), (std::vector<Box>{{1, 5}, {2, 3}}));
  const auto t = a.erase_marks();
  EXPECT_EQ(t.shape().outer(), Partition({4, 2, 2}));
  EXPECT_EQ(t, parse_increasing(". . 1 2/. 1/2 4"));
  EXPECT_THROW(parse_augmented("X 1"), TableauError);
}

TEST(AugmentedTableau, EraseCanDropARow) {
  const auto a = parse_augmented(". 1/X");
  const auto t = a.erase_marks();
  EXPECT_EQ(t.shape().outer(), Partition({2}));
  EXPECT_EQ(t, parse_increasing(". 1"));
}

TEST(SetValuedTableau, ReadingWordAndLattice) {
  const auto t = parse_set_valued("{1,2} 2/3");
  EXPECT_EQ(reading_word(t), (Word{3, 1, 2, 2}));
  EXPECT_EQ(t.content(), (std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(is_partial_reverse_lattice({2, 1, 1}, 1, 2));
  EXPECT_FALSE(is_partial_reverse_lattice({1, 2}, 1, 2));
  EXPECT_TRUE(is_partial_reverse_lattice({1, 2}, 3, 4));
  EXPECT_TRUE(is_partial_reverse_lattice({5, 4}, 1, 2));
}

TEST(RowReadingWord, BottomToTop) {
  EXPECT_EQ(row_reading_word(IncreasingTableau::straight({{1, 2, 3}, {2, 4}})), (Word{2, 4, 1, 2, 3}));
}

TEST(Enumerate, IncreasingMatchesNaiveFilter) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& outer : partitions_of(n))
      for (int k = 0; k < n; ++k)
        for (const auto& inner : partitions_of(k)) {
          if (!outer.contains(inner)) continue;
          const SkewShape shape(outer, inner);
          if (shape.size() > 5) continue;
          for (int m = 1; m <= 3; ++m)
            for (bool surj : {false, true}) {
              const auto got = enumerate_increasing(shape, alphabet_upto(m), surj);
              const std::set<IncreasingTableau> as_set(got.begin(), got.end());
              EXPECT_EQ(as_set.size(), got.size());
              EXPECT_EQ(as_set, naive_increasing(shape, m, surj)) << shape.to_string() << " m=" << m;
            }
        }
}

TEST(Enumerate, SlicesPartitionTheStream) {
  const SkewShape shape(Partition({3, 3, 2}), Partition({1}));
  const auto all = enumerate_increasing(shape, alphabet_upto(5), false);
  std::vector<IncreasingTableau> merged;
  for (int i = 0; i < 3; ++i)
    for_each_increasing(shape, alphabet_upto(5), false, [&](const IncreasingTableau& t) { merged.push_back(t); },
                        {i, 3});
  std::sort(merged.begin(), merged.end());
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(merged, sorted);
}

TEST(Enumerate, StandardTableauxCountByHookLength) {
  // f^(3,2) = 5, f^(3,2,1) = 16, f^(5,4,2,1) = 5775
  auto count = [](const Partition& p) {
    return enumerate_increasing(SkewShape(p, Partition()), alphabet_upto(p.size()), true).size();
  };
  EXPECT_EQ(count(Partition({3, 2})), 5U);
  EXPECT_EQ(count(Partition({3, 2, 1})), 16U);
  EXPECT_EQ(count(Partition({5, 4, 2, 1})), 5775U);
}

TEST(Enumerate, AugmentedWitnessesForTwoOneOverOne) {
  const auto all = enumerate_augmented(SkewShape(Partition({2, 1}), Partition({1})), alphabet_upto(1));
  std::set<AugmentedTableau> got(all.begin(), all.end());
  const std::set<AugmentedTableau> want = {parse_augmented(". 1/1"), parse_augmented(". 1/X"),
                                           parse_augmented(". X/1")};
  EXPECT_EQ(got, want);
}

TEST(Enumerate, SetValuedAreValid) {
  EXPECT_EQ(checked_set_valued(Partition({1}), {1, 1}), 1U);   // {1,2}
  EXPECT_EQ(checked_set_valued(Partition({2}), {1, 1}), 1U);   // 1 2
  EXPECT_EQ(checked_set_valued(Partition({2, 1}), {2, 1}), 1U);  // 1 1 / 2
  EXPECT_EQ(checked_set_valued(Partition({2, 1}), {1, 1, 1}), 2U);
  EXPECT_EQ(checked_set_valued(Partition({2, 1}), {2, 1, 1}), 3U);
}

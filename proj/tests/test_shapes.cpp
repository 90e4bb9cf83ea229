#include <gtest/gtest.h>

#include <set>

#include "kjdt/shapes.hpp"

using namespace kjdt;

namespace {

// Brute force: every subset of boxes of nu whose removal leaves a partition
// and that meets each row and column at most once.
std::set<Partition> rook_strips_naive(const Partition& nu) {
  const auto boxes = nu.boxes();
  std::set<Partition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << boxes.size()); ++mask) {
    std::set<int> rows, cols;
    std::vector<int> parts = nu.vec();
    bool ok = true;
    for (std::size_t i = 0; i < boxes.size() && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      ok = rows.insert(boxes[i].row).second && cols.insert(boxes[i].col).second;
      parts[static_cast<std::size_t>(boxes[i].row - 1)]--;
    }
    if (!ok) continue;
    // the removed boxes must be the last ones of their rows
    bool shape_ok = true;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      if (mask >> i & 1U)
        shape_ok = shape_ok && boxes[i].col == nu.row(boxes[i].row);
    for (std::size_t r = 1; r < parts.size(); ++r) shape_ok = shape_ok && parts[r] <= parts[r - 1];
    if (shape_ok) out.insert(Partition(parts));
  }
  return out;
}

}  // namespace

TEST(Partition, DropsTrailingZerosAndRejectsIncreasing) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), ShapeError);
  EXPECT_THROW(Partition({2, -1}), ShapeError);
  EXPECT_EQ(Partition({4, 3, 1}).to_string(), "[4,3,1]");
  EXPECT_EQ(Partition().to_string(), "[]");
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), p.size());
    }
  EXPECT_EQ(Partition({5, 4, 2, 1}).conjugate(), Partition({4, 3, 2, 2, 1}));
}

TEST(Partition, CornersAddAndRemove) {
  const Partition p({3, 1});
  EXPECT_EQ(p.removable_corners(), (std::vector<Box>{{1, 3}, {2, 1}}));
  EXPECT_EQ(p.addable_corners(), (std::vector<Box>{{1, 4}, {2, 2}, {3, 1}}));
  for (Box b : p.addable_corners()) EXPECT_EQ(p.with_box(b).without_box(b), p);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
  // binomial(rows + cols, rows)
  EXPECT_EQ(partitions_in_rectangle(2, 3).size(), 10U);
  EXPECT_EQ(partitions_in_rectangle(3, 3).size(), 20U);
}

TEST(SkewShape, RejectsNonContainedInner) {
  EXPECT_THROW(SkewShape(Partition({2}), Partition({1, 1})), ShapeError);
  EXPECT_EQ(SkewShape(Partition({3, 2}), Partition({1})).size(), 4);
}

TEST(Star, PlacesLambdaSouthwestOfMu) {
  const auto s = star(Partition({2}), Partition({2, 1}));
  EXPECT_EQ(s.outer(), Partition({4, 3, 2}));
  EXPECT_EQ(s.inner(), Partition({2, 2}));
  const auto t = star(Partition({2, 1}), Partition({2}));
  EXPECT_EQ(t.outer(), Partition({4, 2, 1}));
  EXPECT_EQ(t.inner(), Partition({2}));
  EXPECT_EQ(star(Partition(), Partition({3, 1})).outer(), Partition({3, 1}));
  EXPECT_EQ(star(Partition({2, 2}), Partition()).inner(), Partition());
}

TEST(Star, SizeIsTheSum) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& l : partitions_of(a))
        for (const auto& m : partitions_of(b)) EXPECT_EQ(star(l, m).size(), a + b);
}

TEST(Rectangle, DualIsAnInvolution) {
  const AmbientRectangle r(3, 7);
  EXPECT_EQ(r.rows(), 3);
  EXPECT_EQ(r.cols(), 4);
  for (const auto& p : partitions_in_rectangle(3, 4)) {
    EXPECT_EQ(dual_in_rectangle(dual_in_rectangle(p, r), r), p);
    EXPECT_EQ(dual_in_rectangle(p, r).size(), 12 - p.size());
  }
  EXPECT_EQ(dual_in_rectangle(Partition({3, 1}), r), Partition({4, 3, 1}));
  EXPECT_THROW(dual_in_rectangle(Partition({5}), r), ShapeError);
}

TEST(Rectangle, BoundaryWordRoundTrips) {
  const AmbientRectangle r(3, 6);
  for (const auto& p : partitions_in_rectangle(3, 3)) {
    const auto w = boundary_word(p, r);
    EXPECT_EQ(w.size(), 3U);
    EXPECT_EQ(from_boundary_word(w, r), p);
  }
}

TEST(Frame, DaggerAndOslashFitTheTotalRectangle) {
  const DirectSumFrame f(2, 4, 1, 3);
  EXPECT_EQ(f.k(), 3);
  EXPECT_EQ(f.n(), 7);
  const AmbientRectangle total(f.k(), f.n());
  for (const auto& l : partitions_in_rectangle(2, 2))
    for (const auto& m : partitions_in_rectangle(1, 2)) {
      const auto d = dagger(l, m, f);
      const auto o = oslash(m, l, f);
      EXPECT_TRUE(total.fits(d));
      EXPECT_TRUE(total.fits(o));
      EXPECT_EQ(d.size(), l.size() + m.size() + f.k2 * (f.n1 - f.k1));
      EXPECT_EQ(o.size(), l.size() + m.size() + f.k1 * (f.n2 - f.k2));
    }
  // omega: full rectangle minus its southeast k2 x (n1-k1) block
  EXPECT_EQ(omega(f), Partition({4, 4, 2}));
}

TEST(RookStrips, MatchBruteForce) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& nu : partitions_of(n)) {
      const auto got = rook_strip_contractions(nu);
      EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), rook_strips_naive(nu)) << nu.to_string();
      EXPECT_EQ(got.front(), nu);
    }
  EXPECT_EQ(rook_strip_contractions(Partition({2, 1})).size(), 4U);
  EXPECT_EQ(rook_strip_contractions(Partition({2, 2})).size(), 2U);
}

TEST(Corners, InnerAndOuter) {
  const SkewShape s(Partition({3, 2}), Partition({2}));
  EXPECT_EQ(inner_corners(s), (std::vector<Box>{{1, 2}}));
  const auto out = outer_corners(s, AmbientRectangle::of_size(3, 4));
  EXPECT_EQ(out, (std::vector<Box>{{1, 4}, {2, 3}, {3, 1}}));
}

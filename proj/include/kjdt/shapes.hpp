#pragma once

// Young diagrams, skew shapes, ambient rectangles and the shape constructions
// used to index K-theoretic Schubert coefficients.
//
// Boxes use 1-based (row, column) matrix coordinates with row 1 at the top.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kjdt {

struct Box {
  int row = 0;
  int col = 0;

  auto operator<=>(const Box&) const = default;
};

/// Raised when a shape does not fit the rectangle (or frame) it is used in,
/// or when a shape argument is malformed.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer partition, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Zeros at the end are dropped. Throws ShapeError on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition rectangle(int rows, int cols);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Row length, 1-based; zero past the last row.
  int row(int r) const {
    return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool is_rectangle() const;

  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }
  /// Componentwise containment: other ⊆ *this.
  bool contains(const Partition& other) const;

  Partition conjugate() const;
  std::vector<Box> boxes() const;

  /// Removable boxes (ends of rows that have nothing below them).
  std::vector<Box> removable_corners() const;
  /// Boxes that can be added while keeping a partition.
  std::vector<Box> addable_corners() const;

  Partition with_box(Box b) const;
  Partition without_box(Box b) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Region {(r,c) : inner_r < c <= outer_r}.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition straight) : SkewShape(std::move(straight), Partition{}) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_straight() const { return inner_.empty(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Box b) const { return outer_.contains(b) && !inner_.contains(b); }
  std::vector<Box> boxes() const;

  std::string to_string() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// The k x (n-k) rectangle of Gr(k, n).
struct AmbientRectangle {
  int k = 0;
  int n = 0;

  AmbientRectangle() = default;
  AmbientRectangle(int k_, int n_);
  static AmbientRectangle of_size(int rows, int cols) { return {rows, rows + cols}; }

  int rows() const { return k; }
  int cols() const { return n - k; }
  bool fits(const Partition& p) const { return p.length() <= rows() && p.width() <= cols(); }
  bool contains(Box b) const { return b.row >= 1 && b.row <= rows() && b.col >= 1 && b.col <= cols(); }
  void require_fit(const Partition& p, const char* what) const;
  Partition full() const { return Partition::rectangle(rows(), cols()); }

  auto operator<=>(const AmbientRectangle&) const = default;
};

/// Gr(k1,n1) x Gr(k2,n2) -> Gr(k1+k2, n1+n2).
struct DirectSumFrame {
  int k1 = 0, n1 = 0, k2 = 0, n2 = 0;

  DirectSumFrame() = default;
  DirectSumFrame(int k1_, int n1_, int k2_, int n2_);

  int k() const { return k1 + k2; }
  int n() const { return n1 + n2; }
  AmbientRectangle first() const { return {k1, n1}; }
  AmbientRectangle second() const { return {k2, n2}; }
  AmbientRectangle total() const { return {k(), n()}; }

  /// Smallest frame with lambda in the first factor, mu in the second and
  /// nu in the total rectangle.
  static DirectSumFrame minimal_for(const Partition& lambda, const Partition& mu, const Partition& nu);

  auto operator<=>(const DirectSumFrame&) const = default;
};

// Shape constructions.

Partition dual_in_rectangle(const Partition& lambda, const AmbientRectangle& rect);

/// lambda southwest of mu, corner to corner. The inner shape is the
/// l(mu) x lambda_1 rectangle.
SkewShape star(const Partition& lambda, const Partition& mu);

/// mu to the right of, lambda below, the k2 x (n1-k1) rectangle.
Partition dagger(const Partition& lambda, const Partition& mu, const DirectSumFrame& frame);

/// lambda to the right of, mu below, the k1 x (n2-k2) rectangle.
Partition oslash(const Partition& mu, const Partition& lambda, const DirectSumFrame& frame);

/// The full rectangle with its southeast k2 x (n1-k1) block removed.
Partition omega(const DirectSumFrame& frame);

/// Every nu_bar with nu/nu_bar a rook strip (no two boxes in one row or
/// column), nu itself included. Ordered by decreasing size, then lexicographically.
std::vector<Partition> rook_strip_contractions(const Partition& nu);

/// The k-subset of {1..n} marking the down steps of the NE-to-SW boundary walk.
std::vector<int> boundary_word(const Partition& lambda, const AmbientRectangle& rect);
Partition from_boundary_word(const std::vector<int>& downs, const AmbientRectangle& rect);

std::vector<Box> inner_corners(const SkewShape& shape);
std::vector<Box> outer_corners(const SkewShape& shape, const AmbientRectangle& ambient);

/// All partitions inside the rows x cols rectangle, by size then lexicographically.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);
/// All partitions of n.
std::vector<Partition> partitions_of(int n);

}  // namespace kjdt

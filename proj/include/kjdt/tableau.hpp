#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kjdt/shapes.hpp"

namespace kjdt {

/// A filling that breaks a tableau invariant (row or column strictness,
/// wrong row length, misplaced mark, ...).
class TableauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An engine-level consistency check failed. Valid inputs never trigger it.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Word = std::vector<int>;

/// Skew tableau whose rows and columns strictly increase.
///
/// `rows[r-1]` lists the entries of row r from column inner_r+1 to outer_r.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;
  IncreasingTableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight shape read off the row lengths.
  static IncreasingTableau straight(std::vector<std::vector<int>> rows);
  /// Skew tableau given as full rows where the first `inner[r]` cells of each
  /// row are ignored placeholders.
  static IncreasingTableau from_grid(const Partition& inner, const std::vector<std::vector<int>>& grid);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  bool empty() const { return shape_.size() == 0; }

  /// Entry at a box of the skew region.
  int at(Box b) const;
  std::vector<std::pair<Box, int>> entries() const;
  /// Sorted distinct entries.
  std::vector<int> values() const;
  int max_entry() const;

  std::string to_string() const;

  auto operator<=>(const IncreasingTableau&) const = default;

  /// Skips validation; for engine code that constructs fillings which are
  /// increasing by construction.
  static IncreasingTableau trusted(SkewShape shape, std::vector<std::vector<int>> rows) {
    IncreasingTableau t;
    t.shape_ = std::move(shape);
    t.rows_ = std::move(rows);
    return t;
  }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Increasing tableau in which some removable corners of the outer shape
/// (inside the skew region) carry the mark X instead of a number.
class AugmentedTableau {
 public:
  static constexpr int kMark = INT_MAX;

  AugmentedTableau() = default;
  /// Same layout as IncreasingTableau, with kMark for X cells.
  AugmentedTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<Box> marks() const;
  bool is_mark(Box b) const;
  int at(Box b) const;

  /// Drops the X cells; the result lives on (outer minus marks)/inner.
  IncreasingTableau erase_marks() const;

  std::string to_string() const;

  auto operator<=>(const AugmentedTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Straight-shape tableau with nonempty sets of labels in each box; rows
/// weakly increase (max left <= min right), columns strictly increase.
class SetValuedTableau {
 public:
  using Cell = std::vector<int>;

  SetValuedTableau() = default;
  explicit SetValuedTableau(std::vector<std::vector<Cell>> rows);

  Partition shape() const;
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const Cell& at(Box b) const { return rows_.at(static_cast<std::size_t>(b.row - 1)).at(static_cast<std::size_t>(b.col - 1)); }
  /// Number of occurrences of each label 1..max.
  std::vector<int> content() const;

  std::string to_string() const;

  auto operator<=>(const SetValuedTableau&) const = default;

 private:
  std::vector<std::vector<Cell>> rows_;
};

/// Row r holds 1 + (mu_1 + ... + mu_{r-1}), ... consecutively.
IncreasingTableau superstandard(const Partition& mu);
bool is_superstandard(const IncreasingTableau& t);

/// Rows bottom to top, left to right, each cell's labels in increasing order.
Word reading_word(const SetValuedTableau& t);

/// For every j in (a, b] and every suffix of w, #(j-1) >= #j. Letters outside
/// [a, b] are ignored; an empty interval (b < a) accepts everything.
bool is_partial_reverse_lattice(const Word& w, int a, int b);

/// Left to right, bottom to top. Straight shapes only.
Word row_reading_word(const IncreasingTableau& t);

}  // namespace kjdt

#include "kjdt/tableau.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kjdt {
namespace {

std::string box_string(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

void check_row_lengths(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
  const int expected_rows = shape.outer().length();
  if (static_cast<int>(rows.size()) != expected_rows)
    throw TableauError("expected " + std::to_string(expected_rows) + " rows, got " + std::to_string(rows.size()));
  for (int r = 1; r <= expected_rows; ++r) {
    const int len = shape.outer().row(r) - shape.inner().row(r);
    if (static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) != len)
      throw TableauError("row " + std::to_string(r) + " needs " + std::to_string(len) + " entries");
  }
}

// Marks (INT_MAX) compare as +infinity.
void check_strict(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
  auto value = [&](int r, int c) {
    return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - shape.inner().row(r) - 1)];
  };
  for (int r = 1; r <= shape.outer().length(); ++r) {
    for (int c = shape.inner().row(r) + 1; c <= shape.outer().row(r); ++c) {
      const int v = value(r, c);
      if (v <= 0) throw TableauError("entry at " + box_string({r, c}) + " must be positive");
      if (c > shape.inner().row(r) + 1 && value(r, c - 1) >= v)
        throw TableauError("row " + std::to_string(r) + " does not strictly increase at " + box_string({r, c}));
      if (r > 1 && shape.contains({r - 1, c}) && value(r - 1, c) >= v)
        throw TableauError("column " + std::to_string(c) + " does not strictly increase at " + box_string({r, c}));
    }
  }
}

}  // namespace

IncreasingTableau::IncreasingTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_row_lengths(shape_, rows_);
  check_strict(shape_, rows_);
  for (const auto& row : rows_)
    for (int v : row)
      if (v == AugmentedTableau::kMark) throw TableauError("increasing tableaux cannot hold marks");
}

IncreasingTableau IncreasingTableau::straight(std::vector<std::vector<int>> rows) {
  std::vector<int> lens;
  for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  Partition outer;
  try {
    outer = Partition(lens);
  } catch (const ShapeError& e) {
    throw TableauError(std::string("row lengths do not form a partition: ") + e.what());
  }
  return {SkewShape(outer), std::move(rows)};
}

IncreasingTableau IncreasingTableau::from_grid(const Partition& inner, const std::vector<std::vector<int>>& grid) {
  std::vector<int> lens;
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    lens.push_back(static_cast<int>(grid[r].size()));
    const int skip = inner.row(static_cast<int>(r) + 1);
    if (skip > static_cast<int>(grid[r].size())) throw TableauError("grid row shorter than the inner shape");
    rows.emplace_back(grid[r].begin() + skip, grid[r].end());
  }
  return {SkewShape(Partition(lens), inner), std::move(rows)};
}

int IncreasingTableau::at(Box b) const {
  if (!shape_.contains(b)) throw std::out_of_range("box outside the skew region");
  return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - shape_.inner().row(b.row) - 1)];
}

std::vector<std::pair<Box, int>> IncreasingTableau::entries() const {
  std::vector<std::pair<Box, int>> out;
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r - 1)];
    for (std::size_t i = 0; i < row.size(); ++i)
      out.push_back({{r, shape_.inner().row(r) + 1 + static_cast<int>(i)}, row[i]});
  }
  return out;
}

std::vector<int> IncreasingTableau::values() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int IncreasingTableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    if (!row.empty()) m = std::max(m, row.back());
  return m;
}

std::string IncreasingTableau::to_string() const {
  std::ostringstream os;
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    if (r > 1) os << '\n';
    for (int c = 1; c <= shape_.outer().row(r); ++c) {
      if (c > 1) os << ' ';
      if (c <= shape_.inner().row(r))
        os << '.';
      else
        os << at({r, c});
    }
  }
  return os.str();
}

AugmentedTableau::AugmentedTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_row_lengths(shape_, rows_);
  // Marks may only sit on removable corners of the outer shape, where the
  // +infinity convention makes strictness automatic.
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r - 1)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != kMark) continue;
      const Box b{r, shape_.inner().row(r) + 1 + static_cast<int>(i)};
      const bool corner = b.col == shape_.outer().row(r) && shape_.outer().row(r + 1) < b.col;
      if (!corner) throw TableauError("X at " + box_string(b) + " is not an outer corner");
    }
  }
  check_strict(shape_, rows_);
}

std::vector<Box> AugmentedTableau::marks() const {
  std::vector<Box> out;
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r - 1)];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] == kMark) out.push_back({r, shape_.inner().row(r) + 1 + static_cast<int>(i)});
  }
  return out;
}

bool AugmentedTableau::is_mark(Box b) const { return at(b) == kMark; }

int AugmentedTableau::at(Box b) const {
  if (!shape_.contains(b)) throw std::out_of_range("box outside the skew region");
  return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - shape_.inner().row(b.row) - 1)];
}

IncreasingTableau AugmentedTableau::erase_marks() const {
  std::vector<int> outer = shape_.outer().vec();
  std::vector<std::vector<int>> rows = rows_;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty() && rows[r].back() == kMark) {
      rows[r].pop_back();
      outer[r] -= 1;
    }
  }
  Partition reduced(outer);
  rows.resize(static_cast<std::size_t>(reduced.length()));
  return {SkewShape(std::move(reduced), shape_.inner()), std::move(rows)};
}

std::string AugmentedTableau::to_string() const {
  std::ostringstream os;
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    if (r > 1) os << '\n';
    for (int c = 1; c <= shape_.outer().row(r); ++c) {
      if (c > 1) os << ' ';
      if (c <= shape_.inner().row(r)) {
        os << '.';
      } else {
        const int v = at({r, c});
        if (v == kMark)
          os << 'X';
        else
          os << v;
      }
    }
  }
  return os.str();
}

SetValuedTableau::SetValuedTableau(std::vector<std::vector<Cell>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (auto& row : rows_) {
    lens.push_back(static_cast<int>(row.size()));
    for (auto& cell : row) {
      if (cell.empty()) throw TableauError("set-valued cells must be nonempty");
      std::sort(cell.begin(), cell.end());
      if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
        throw TableauError("set-valued cells cannot repeat a label");
      if (cell.front() <= 0) throw TableauError("labels must be positive");
    }
  }
  try {
    (void)Partition(lens);
  } catch (const ShapeError& e) {
    throw TableauError(std::string("row lengths do not form a partition: ") + e.what());
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const Box b{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      if (c > 0 && rows_[r][c - 1].back() > rows_[r][c].front())
        throw TableauError("row " + std::to_string(b.row) + " is not weakly increasing at " + box_string(b));
      if (r > 0 && rows_[r - 1][c].back() >= rows_[r][c].front())
        throw TableauError("column " + std::to_string(b.col) + " is not strictly increasing at " + box_string(b));
    }
  }
}

Partition SetValuedTableau::shape() const {
  std::vector<int> lens;
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
  return Partition(lens);
}

std::vector<int> SetValuedTableau::content() const {
  std::vector<int> out;
  for (const auto& row : rows_)
    for (const auto& cell : row)
      for (int v : cell) {
        if (static_cast<int>(out.size()) < v) out.resize(static_cast<std::size_t>(v), 0);
        ++out[static_cast<std::size_t>(v - 1)];
      }
  return out;
}

std::string SetValuedTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) os << '\n';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) os << ' ';
      const auto& cell = rows_[r][c];
      if (cell.size() == 1) {
        os << cell.front();
      } else {
        os << '{';
        for (std::size_t i = 0; i < cell.size(); ++i) os << (i ? "," : "") << cell[i];
        os << '}';
      }
    }
  }
  return os.str();
}

IncreasingTableau superstandard(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : mu.parts()) {
    std::vector<int> row;
    for (int i = 0; i < len; ++i) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return IncreasingTableau::straight(std::move(rows));
}

bool is_superstandard(const IncreasingTableau& t) {
  return t.shape().is_straight() && t == superstandard(t.shape().outer());
}

Word reading_word(const SetValuedTableau& t) {
  Word w;
  for (auto row = t.rows().rbegin(); row != t.rows().rend(); ++row)
    for (const auto& cell : *row) w.insert(w.end(), cell.begin(), cell.end());
  return w;
}

bool is_partial_reverse_lattice(const Word& w, int a, int b) {
  if (b <= a) return true;
  std::vector<int> counts(static_cast<std::size_t>(b - a + 1), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int letter = *it;
    if (letter < a || letter > b) continue;
    const auto idx = static_cast<std::size_t>(letter - a);
    ++counts[idx];
    if (idx > 0 && counts[idx] > counts[idx - 1]) return false;
  }
  return true;
}

Word row_reading_word(const IncreasingTableau& t) {
  if (!t.shape().is_straight()) throw TableauError("row reading word needs a straight shape");
  Word w;
  for (auto row = t.rows().rbegin(); row != t.rows().rend(); ++row) w.insert(w.end(), row->begin(), row->end());
  return w;
}

}  // namespace kjdt

#include "kjdt/enumerate.hpp"

#include <algorithm>

namespace kjdt {
namespace {

// Longest right/down chain starting at each box, so a value needs at least
// that many larger letters left in the alphabet.
std::vector<int> chain_lengths(const SkewShape& shape, const std::vector<Box>& boxes) {
  std::vector<int> need;
  need.reserve(boxes.size());
  for (Box b : boxes) {
    int best = 0;
    for (int r = b.row; shape.outer().row(r) >= b.col; ++r)
      best = std::max(best, (r - b.row) + (shape.outer().row(r) - b.col));
    need.push_back(best);
  }
  return need;
}

class IncreasingSearch {
 public:
  IncreasingSearch(const SkewShape& shape, const std::vector<int>& alphabet, bool surjective,
                   const std::function<void(const IncreasingTableau&)>& visit, EnumerationSlice slice)
      : shape_(shape),
        alphabet_(alphabet),
        surjective_(surjective),
        visit_(visit),
        slice_(slice),
        boxes_(shape.boxes()),
        need_(chain_lengths(shape, boxes_)),
        used_(alphabet.size(), 0) {
    for (int r = 1; r <= shape.outer().length(); ++r)
      rows_.emplace_back(static_cast<std::size_t>(shape.outer().row(r) - shape.inner().row(r)), 0);
    idx_rows_ = rows_;
  }

  void run() {
    if (boxes_.empty()) {
      if (!surjective_ || alphabet_.empty()) visit_(IncreasingTableau::trusted(shape_, rows_));
      return;
    }
    if (alphabet_.empty()) return;
    place(0);
  }

 private:
  int& value_at(Box b) { return rows_[idx(b.row - 1)][idx(b.col - shape_.inner().row(b.row) - 1)]; }
  int& index_at(Box b) { return idx_rows_[idx(b.row - 1)][idx(b.col - shape_.inner().row(b.row) - 1)]; }
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  void place(std::size_t pos) {
    if (pos == boxes_.size()) {
      if (surjective_ && distinct_ != static_cast<int>(alphabet_.size())) return;
      visit_(IncreasingTableau::trusted(shape_, rows_));
      return;
    }
    const Box b = boxes_[pos];
    // Smallest admissible alphabet index.
    int lo = 0;
    if (shape_.contains({b.row, b.col - 1})) lo = std::max(lo, index_at({b.row, b.col - 1}) + 1);
    if (shape_.contains({b.row - 1, b.col})) lo = std::max(lo, index_at({b.row - 1, b.col}) + 1);
    const int hi = static_cast<int>(alphabet_.size()) - 1 - need_[pos];
    const int remaining_after = static_cast<int>(boxes_.size() - pos - 1);
    int choice = 0;
    for (int i = lo; i <= hi; ++i, ++choice) {
      if (pos == 0 && slice_.count > 1 && choice % slice_.count != slice_.index) continue;
      const bool fresh = used_[idx(i)] == 0;
      if (surjective_) {
        const int missing = static_cast<int>(alphabet_.size()) - distinct_ - (fresh ? 1 : 0);
        if (missing > remaining_after) continue;
      }
      ++used_[idx(i)];
      if (fresh) ++distinct_;
      index_at(b) = i;
      value_at(b) = alphabet_[idx(i)];
      place(pos + 1);
      --used_[idx(i)];
      if (fresh) --distinct_;
    }
  }

  const SkewShape& shape_;
  const std::vector<int>& alphabet_;
  bool surjective_;
  const std::function<void(const IncreasingTableau&)>& visit_;
  EnumerationSlice slice_;
  std::vector<Box> boxes_;
  std::vector<int> need_;
  std::vector<int> used_;
  int distinct_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> idx_rows_;
};

std::vector<int> normalized(std::vector<int> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (!alphabet.empty() && alphabet.front() <= 0) throw TableauError("alphabet letters must be positive");
  return alphabet;
}

}  // namespace

std::vector<int> alphabet_upto(int m) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) out.push_back(i);
  return out;
}

void for_each_increasing(const SkewShape& shape, const std::vector<int>& alphabet, bool surjective,
                         const std::function<void(const IncreasingTableau&)>& visit, EnumerationSlice slice) {
  const std::vector<int> letters = normalized(alphabet);
  IncreasingSearch(shape, letters, surjective, visit, slice).run();
}

std::vector<IncreasingTableau> enumerate_increasing(const SkewShape& shape, const std::vector<int>& alphabet,
                                                    bool surjective) {
  std::vector<IncreasingTableau> out;
  for_each_increasing(shape, alphabet, surjective, [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

std::vector<Box> markable_corners(const SkewShape& shape) {
  std::vector<Box> out;
  for (Box b : shape.outer().removable_corners())
    if (shape.contains(b)) out.push_back(b);
  return out;
}

void for_each_augmented(const SkewShape& shape, const std::vector<int>& alphabet,
                        const std::function<void(const AugmentedTableau&)>& visit) {
  const std::vector<Box> corners = markable_corners(shape);
  const std::size_t subsets = std::size_t{1} << corners.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> outer = shape.outer().vec();
    for (std::size_t i = 0; i < corners.size(); ++i)
      if (mask & (std::size_t{1} << i)) outer[static_cast<std::size_t>(corners[i].row - 1)] -= 1;
    const SkewShape numeric(Partition(outer), shape.inner());
    for_each_increasing(numeric, alphabet, true, [&](const IncreasingTableau& t) {
      std::vector<std::vector<int>> rows = t.rows();
      rows.resize(static_cast<std::size_t>(shape.outer().length()));
      for (std::size_t i = 0; i < corners.size(); ++i)
        if (mask & (std::size_t{1} << i)) rows[static_cast<std::size_t>(corners[i].row - 1)].push_back(AugmentedTableau::kMark);
      visit(AugmentedTableau(shape, std::move(rows)));
    });
  }
}

std::vector<AugmentedTableau> enumerate_augmented(const SkewShape& shape, const std::vector<int>& alphabet) {
  std::vector<AugmentedTableau> out;
  for_each_augmented(shape, alphabet, [&](const AugmentedTableau& t) { out.push_back(t); });
  return out;
}

void for_each_set_valued(const Partition& nu, const std::vector<int>& content,
                         const std::function<void(const SetValuedTableau&)>& visit) {
  const int letters = static_cast<int>(content.size());
  if (letters > 20) throw TableauError("set-valued enumeration supports at most 20 letters");
  for (int c : content)
    if (c < 0) throw TableauError("content entries must be nonnegative");
  const std::vector<Box> boxes = nu.boxes();
  std::vector<int> remaining = content;
  int remaining_total = 0;
  for (int c : content) remaining_total += c;

  std::vector<std::vector<SetValuedTableau::Cell>> grid;
  for (int len : nu.parts()) grid.emplace_back(static_cast<std::size_t>(len));

  // Masks ordered by their smallest letter, then numerically.
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << letters); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_ctz(a) < __builtin_ctz(b);
  });

  std::function<void(std::size_t)> place = [&](std::size_t pos) {
    if (pos == boxes.size()) {
      if (remaining_total == 0) visit(SetValuedTableau(grid));
      return;
    }
    const int boxes_left = static_cast<int>(boxes.size() - pos);
    if (remaining_total < boxes_left) return;
    const Box b = boxes[pos];
    int min_letter = 1;
    if (b.col > 1) min_letter = std::max(min_letter, grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 2)].back());
    if (b.row > 1) min_letter = std::max(min_letter, grid[static_cast<std::size_t>(b.row - 2)][static_cast<std::size_t>(b.col - 1)].back() + 1);
    for (unsigned m : masks) {
      if (__builtin_ctz(m) + 1 < min_letter) continue;
      bool ok = true;
      int weight = 0;
      for (int l = 0; l < letters && ok; ++l)
        if (m & (1u << l)) {
          ok = remaining[static_cast<std::size_t>(l)] > 0;
          ++weight;
        }
      if (!ok || remaining_total - weight < boxes_left - 1) continue;
      auto& cell = grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)];
      cell.clear();
      for (int l = 0; l < letters; ++l)
        if (m & (1u << l)) {
          cell.push_back(l + 1);
          --remaining[static_cast<std::size_t>(l)];
        }
      remaining_total -= weight;
      place(pos + 1);
      remaining_total += weight;
      for (int l : cell) ++remaining[static_cast<std::size_t>(l - 1)];
    }
    grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)].clear();
  };
  place(0);
}

std::vector<SetValuedTableau> enumerate_set_valued(const Partition& nu, const std::vector<int>& content) {
  std::vector<SetValuedTableau> out;
  for_each_set_valued(nu, content, [&](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace kjdt

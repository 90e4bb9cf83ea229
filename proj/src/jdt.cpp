#include "kjdt/jdt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kjdt {
namespace {

constexpr int kEmpty = 0;
constexpr int kBullet = -1;

struct RibbonCell {
  Box box;
  bool numeric;  // before the switch
};
using Ribbon = std::vector<RibbonCell>;

using SwitchObserver = std::function<void(int label, const std::vector<Ribbon>&)>;

// Dense working copy of a tableau plus its shape, large enough to hold every
// box a slide may touch.
class SlideGrid {
 public:
  SlideGrid(const IncreasingTableau& t, int rows, int cols)
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols), kEmpty),
        outer_(static_cast<std::size_t>(rows), 0), inner_(static_cast<std::size_t>(rows), 0) {
    const SkewShape& shape = t.shape();
    if (shape.outer().length() > rows || shape.outer().width() > cols)
      throw ShapeError("tableau does not fit the working grid");
    for (int r = 1; r <= shape.outer().length(); ++r) {
      outer_[idx(r - 1)] = shape.outer().row(r);
      inner_[idx(r - 1)] = shape.inner().row(r);
    }
    for (const auto& [box, value] : t.entries()) cell(box) = value;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int outer_row(int r) const { return (r >= 1 && r <= rows_) ? outer_[idx(r - 1)] : 0; }
  int inner_row(int r) const { return (r >= 1 && r <= rows_) ? inner_[idx(r - 1)] : 0; }
  bool in_grid(Box b) const { return b.row >= 1 && b.row <= rows_ && b.col >= 1 && b.col <= cols_; }
  int value(Box b) const { return in_grid(b) ? cells_[offset(b)] : kEmpty; }

  bool is_inner_corner(Box b) const {
    return b.row >= 1 && b.row <= rows_ && b.col >= 1 && b.col == inner_row(b.row) && inner_row(b.row + 1) < b.col;
  }
  bool is_outer_corner(Box b) const {
    return in_grid(b) && b.col == outer_row(b.row) + 1 && (b.row == 1 || outer_row(b.row - 1) >= b.col);
  }

  std::vector<Box> inner_corners() const {
    std::vector<Box> out;
    for (int r = 1; r <= rows_; ++r)
      if (inner_row(r) > 0 && inner_row(r + 1) < inner_row(r)) out.push_back({r, inner_row(r)});
    return out;
  }
  std::vector<Box> outer_corners() const {
    std::vector<Box> out;
    for (int r = 1; r <= rows_; ++r) {
      const Box b{r, outer_row(r) + 1};
      if (is_outer_corner(b)) out.push_back(b);
    }
    return out;
  }

  /// Runs one slide; returns where the bullets finished.
  std::vector<Box> slide(const std::vector<Box>& corners, SlideDirection dir, const SwitchObserver* observer) {
    std::vector<Box> bullets = corners;
    for (Box b : bullets) cell(b) = kBullet;

    std::vector<std::pair<int, Box>> labelled;
    for (int r = 1; r <= rows_; ++r)
      for (int c = inner_row(r) + 1; c <= outer_row(r); ++c) {
        const int v = cells_[offset({r, c})];
        if (v > 0) labelled.push_back({v, {r, c}});
      }
    if (dir == SlideDirection::kForward)
      std::sort(labelled.begin(), labelled.end());
    else
      std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });

    std::vector<Box> moving_labels;
    std::vector<Box> moving_bullets;
    for (std::size_t start = 0; start < labelled.size();) {
      const int label = labelled[start].first;
      std::size_t end = start;
      while (end < labelled.size() && labelled[end].first == label) ++end;

      moving_labels.clear();
      for (std::size_t i = start; i < end; ++i)
        if (touches(labelled[i].second, kBullet)) moving_labels.push_back(labelled[i].second);
      start = end;
      if (moving_labels.empty()) continue;

      moving_bullets.clear();
      for (Box b : bullets)
        if (touches(b, label)) moving_bullets.push_back(b);

      const std::vector<Ribbon> ribbons = collect_ribbons(moving_labels, moving_bullets);
      for (Box b : moving_labels) cell(b) = kBullet;
      for (Box b : moving_bullets) cell(b) = label;
      std::erase_if(bullets, [&](Box b) { return cell(b) != kBullet; });
      bullets.insert(bullets.end(), moving_labels.begin(), moving_labels.end());
      if (observer) (*observer)(label, ribbons);
    }

    std::sort(bullets.begin(), bullets.end());
    if (dir == SlideDirection::kForward) {
      for (Box b : corners) inner_[idx(b.row - 1)] -= 1;
      for (Box b : bullets) outer_[idx(b.row - 1)] -= 1;
      for (Box b : bullets)
        if (b.col != outer_row(b.row) + 1) throw InternalError("forward slide left a bullet inside the shape");
    } else {
      for (Box b : corners) outer_[idx(b.row - 1)] += 1;
      for (Box b : bullets) inner_[idx(b.row - 1)] += 1;
      for (Box b : bullets)
        if (b.col != inner_row(b.row)) throw InternalError("reverse slide left a bullet inside the shape");
    }
    for (Box b : bullets) cell(b) = kEmpty;
    check_partitions();
    return bullets;
  }

  std::vector<Box> bullets() const {
    std::vector<Box> out;
    for (int r = 1; r <= rows_; ++r)
      for (int c = 1; c <= cols_; ++c)
        if (cells_[offset({r, c})] == kBullet) out.push_back({r, c});
    return out;
  }

  std::vector<std::pair<Box, int>> numbers() const {
    std::vector<std::pair<Box, int>> out;
    for (int r = 1; r <= rows_; ++r)
      for (int c = 1; c <= cols_; ++c) {
        const int v = cells_[offset({r, c})];
        if (v > 0) out.push_back({{r, c}, v});
      }
    return out;
  }

  SkewShape shape() const {
    return {Partition(outer_), Partition(inner_)};
  }

  IncreasingTableau tableau() const {
    SkewShape s = shape();
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= s.outer().length(); ++r) {
      std::vector<int> row;
      for (int c = inner_row(r) + 1; c <= outer_row(r); ++c) row.push_back(cells_[offset({r, c})]);
      rows.push_back(std::move(row));
    }
    return IncreasingTableau::trusted(std::move(s), std::move(rows));
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  std::size_t offset(Box b) const { return static_cast<std::size_t>((b.row - 1) * cols_ + (b.col - 1)); }
  int& cell(Box b) { return cells_[offset(b)]; }

  bool touches(Box b, int what) const {
    return value({b.row - 1, b.col}) == what || value({b.row + 1, b.col}) == what ||
           value({b.row, b.col - 1}) == what || value({b.row, b.col + 1}) == what;
  }

  static bool adjacent(Box a, Box b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1; }

  // Groups the switching boxes into alternating ribbons and checks that each
  // is short: no 2x2 block, at most two boxes per row and column.
  static std::vector<Ribbon> collect_ribbons(const std::vector<Box>& labels, const std::vector<Box>& bullets) {
    std::vector<RibbonCell> cells;
    for (Box b : labels) cells.push_back({b, true});
    for (Box b : bullets) cells.push_back({b, false});
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = labels.size(); j < cells.size(); ++j)
        if (adjacent(cells[i].box, cells[j].box)) parent[find(i)] = find(j);

    std::map<std::size_t, Ribbon> groups;
    for (std::size_t i = 0; i < cells.size(); ++i) groups[find(i)].push_back(cells[i]);
    std::vector<Ribbon> out;
    for (auto& [root, ribbon] : groups) {
      std::map<int, int> per_row;
      std::map<int, int> per_col;
      std::vector<Box> boxes;
      for (const auto& rc : ribbon) {
        ++per_row[rc.box.row];
        ++per_col[rc.box.col];
        boxes.push_back(rc.box);
      }
      for (const auto& [r, n] : per_row)
        if (n > 2) throw InternalError("switch ribbon has three boxes in a row");
      for (const auto& [c, n] : per_col)
        if (n > 2) throw InternalError("switch ribbon has three boxes in a column");
      std::sort(boxes.begin(), boxes.end());
      for (Box b : boxes) {
        auto has = [&](Box x) { return std::binary_search(boxes.begin(), boxes.end(), x); };
        if (has({b.row, b.col + 1}) && has({b.row + 1, b.col}) && has({b.row + 1, b.col + 1}))
          throw InternalError("switch ribbon contains a 2x2 block");
      }
      std::sort(ribbon.begin(), ribbon.end(), [](const RibbonCell& a, const RibbonCell& b) { return a.box < b.box; });
      out.push_back(std::move(ribbon));
    }
    return out;
  }

  void check_partitions() const {
    for (int r = 1; r < rows_; ++r)
      if (outer_[idx(r)] > outer_[idx(r - 1)] || inner_[idx(r)] > inner_[idx(r - 1)])
        throw InternalError("slide produced a shape that is not skew");
    for (int r = 1; r <= rows_; ++r)
      if (inner_[idx(r - 1)] > outer_[idx(r - 1)] || inner_[idx(r - 1)] < 0)
        throw InternalError("slide produced a shape that is not skew");
  }

  int rows_;
  int cols_;
  std::vector<int> cells_;
  std::vector<int> outer_;
  std::vector<int> inner_;
};

std::string box_text(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

void check_corner_set(const std::vector<Box>& corners) {
  if (corners.empty()) throw SlideError("a slide needs at least one corner");
  std::vector<Box> sorted = corners;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw SlideError("repeated corner");
}

void check_forward(const SlideGrid& grid, const std::vector<Box>& corners) {
  check_corner_set(corners);
  for (Box b : corners)
    if (!grid.is_inner_corner(b)) throw SlideError(box_text(b) + " is not an inner corner");
}

void check_reverse(const SlideGrid& grid, const std::vector<Box>& corners) {
  check_corner_set(corners);
  for (Box b : corners)
    if (!grid.is_outer_corner(b)) throw SlideError(box_text(b) + " is not an outer corner inside the ambient rectangle");
}

SlideOutcome run_forward(const IncreasingTableau& t, const std::vector<Box>& corners) {
  SlideGrid grid(t, t.shape().outer().length(), t.shape().outer().width());
  check_forward(grid, corners);
  std::vector<Box> vacated = grid.slide(corners, SlideDirection::kForward, nullptr);
  return {grid.tableau(), std::move(vacated)};
}

SlideOutcome run_reverse(const IncreasingTableau& t, const std::vector<Box>& corners, const AmbientRectangle& ambient) {
  ambient.require_fit(t.shape().outer(), "outer shape");
  SlideGrid grid(t, ambient.rows(), ambient.cols());
  check_reverse(grid, corners);
  std::vector<Box> vacated = grid.slide(corners, SlideDirection::kReverse, nullptr);
  return {grid.tableau(), std::move(vacated)};
}

// Shared by kinfusion and krect; the record tableau is only assembled on request.
IncreasingTableau infuse(const IncreasingTableau& inner, const IncreasingTableau& outer,
                         std::vector<std::pair<Box, int>>* record) {
  if (inner.shape().outer() != outer.shape().inner())
    throw ShapeError("nesting mismatch: inner tableau has outer shape " + inner.shape().outer().to_string() +
                     " but the outer tableau has inner shape " + outer.shape().inner().to_string());
  SlideGrid grid(outer, outer.shape().outer().length(), outer.shape().outer().width());
  std::vector<std::pair<Box, int>> order = inner.entries();
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Box> corners;
  for (std::size_t start = 0; start < order.size();) {
    const int label = order[start].second;
    corners.clear();
    while (start < order.size() && order[start].second == label) corners.push_back(order[start++].first);
    for (Box b : corners)
      if (!grid.is_inner_corner(b)) throw InternalError("rectification order label is not at an inner corner");
    for (Box b : grid.slide(corners, SlideDirection::kForward, nullptr))
      if (record) record->push_back({b, label});
  }
  return grid.tableau();
}

}  // namespace

IncreasingTableau kjdt_slide(const IncreasingTableau& t, const std::vector<Box>& corners) {
  return run_forward(t, corners).tableau;
}

SlideOutcome kjdt_slide_tracked(const IncreasingTableau& t, const std::vector<Box>& corners) {
  return run_forward(t, corners);
}

IncreasingTableau rev_kjdt_slide(const IncreasingTableau& t, const std::vector<Box>& corners,
                                 const AmbientRectangle& ambient) {
  return run_reverse(t, corners, ambient).tableau;
}

SlideOutcome rev_kjdt_slide_tracked(const IncreasingTableau& t, const std::vector<Box>& corners,
                                    const AmbientRectangle& ambient) {
  return run_reverse(t, corners, ambient);
}

Infusion kinfusion(const IncreasingTableau& inner, const IncreasingTableau& outer) {
  std::vector<std::pair<Box, int>> record;
  IncreasingTableau slid = infuse(inner, outer, &record);
  std::sort(record.begin(), record.end());
  const Partition& big = outer.shape().outer();
  const Partition small = slid.shape().outer();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(big.length()));
  for (const auto& [box, label] : record) rows[static_cast<std::size_t>(box.row - 1)].push_back(label);
  try {
    return {std::move(slid), IncreasingTableau(SkewShape(big, small), std::move(rows))};
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("K-infusion record is not an increasing tableau: ") + e.what());
  }
}

IncreasingTableau krect(const IncreasingTableau& t, const IncreasingTableau& order) {
  if (!order.shape().is_straight() || order.shape().outer() != t.shape().inner())
    throw ShapeError("rectification order must be a straight tableau of shape " + t.shape().inner().to_string());
  return infuse(order, t, nullptr);
}

IncreasingTableau krect(const IncreasingTableau& t) { return krect(t, superstandard(t.shape().inner())); }

Configuration SwitchState::configuration() const {
  Configuration c;
  for (const auto& [box, value] : numbers) c.numeric.push_back(box);
  c.bullets = bullets;
  return c;
}

SwitchTrace switch_trace(const IncreasingTableau& t, const std::vector<SlideStep>& steps,
                         const AmbientRectangle& ambient) {
  ambient.require_fit(t.shape().outer(), "outer shape");
  SlideGrid grid(t, ambient.rows(), ambient.cols());
  SwitchTrace trace;

  std::optional<SwitchTrace::OriginMap> origins = SwitchTrace::OriginMap{};
  for (const auto& [box, value] : t.entries()) (*origins)[box] = box;

  auto record = [&](int slide, int label, bool uniform) {
    SwitchState state;
    state.numbers = grid.numbers();
    state.bullets = grid.bullets();
    state.slide = slide;
    state.label = label;
    trace.states.push_back(std::move(state));
    trace.origins.push_back(origins);
    trace.uniform.push_back(uniform);
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const SlideStep& step = steps[i];
    const int index = static_cast<int>(i);
    try {
      if (step.direction == SlideDirection::kForward)
        check_forward(grid, step.corners);
      else
        check_reverse(grid, step.corners);
    } catch (const SlideError& e) {
      throw SlideError("step " + std::to_string(index) + ": " + e.what(), index);
    }

    // Bullets are placed on top of the previous slide's result.
    {
      SwitchState state;
      state.numbers = grid.numbers();
      std::vector<Box> placed = step.corners;
      std::sort(placed.begin(), placed.end());
      state.bullets = placed;
      state.slide = index;
      trace.states.push_back(std::move(state));
      trace.origins.push_back(origins);
      trace.uniform.push_back(true);
    }

    SwitchObserver observer = [&](int label, const std::vector<Ribbon>& ribbons) {
      bool uniform = true;
      if (origins) {
        SwitchTrace::OriginMap next = *origins;
        for (const Ribbon& ribbon : ribbons) {
          std::optional<Box> source;
          for (const RibbonCell& rc : ribbon) {
            if (!rc.numeric) continue;
            const Box o = origins->at(rc.box);
            if (source && *source != o) uniform = false;
            source = o;
          }
          for (const RibbonCell& rc : ribbon) {
            if (rc.numeric)
              next.erase(rc.box);
            else if (source)
              next[rc.box] = *source;
          }
        }
        if (uniform)
          origins = std::move(next);
        else
          origins.reset();
      } else {
        uniform = false;
      }
      record(index, label, uniform);
    };
    grid.slide(step.corners, step.direction, &observer);
  }
  trace.result = grid.tableau();
  return trace;
}

std::string format_trace(const SwitchTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const SwitchState& s = trace.states[i];
    os << "# state " << i << " slide " << s.slide << " label " << s.label
       << " uniform " << (trace.uniform[i] ? "yes" : "no") << '\n';
    std::map<Box, std::string> cells;
    for (const auto& [box, value] : s.numbers) cells[box] = std::to_string(value);
    for (Box b : s.bullets) cells[b] = "*";
    int last_row = 0;
    for (const auto& [box, text] : cells) last_row = std::max(last_row, box.row);
    for (int r = 1; r <= last_row; ++r) {
      int last_col = 0;
      for (const auto& [box, text] : cells)
        if (box.row == r) last_col = std::max(last_col, box.col);
      for (int c = 1; c <= last_col; ++c) {
        if (c > 1) os << ' ';
        auto it = cells.find({r, c});
        os << (it == cells.end() ? "." : it->second);
      }
      os << '\n';
    }
  }
  return os.str();
}

PlacedTableau rev_krect_in_ambient(const IncreasingTableau& t, const AmbientRectangle& ambient, CornerChoice choice) {
  if (!t.shape().is_straight() || !t.shape().outer().is_rectangle())
    throw ShapeError("reverse rectification expects a straight rectangular tableau");
  ambient.require_fit(t.shape().outer(), "tableau shape");
  SlideGrid grid(t, ambient.rows(), ambient.cols());
  for (;;) {
    std::vector<Box> corners = grid.outer_corners();
    if (corners.empty()) break;
    if (choice == CornerChoice::kFirst)
      corners = {corners.front()};
    else if (choice == CornerChoice::kLast)
      corners = {corners.back()};
    grid.slide(corners, SlideDirection::kReverse, nullptr);
  }
  IncreasingTableau out = grid.tableau();
  Box anchor{0, 0};
  const auto entries = out.entries();
  if (!entries.empty()) {
    anchor = entries.front().first;
    for (const auto& [box, value] : entries) {
      anchor.row = std::min(anchor.row, box.row);
      anchor.col = std::min(anchor.col, box.col);
    }
  }
  return {std::move(out), anchor};
}

}  // namespace kjdt

#include "kjdt/equivalence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kjdt/enumerate.hpp"

namespace kjdt {
namespace {

std::string box_text(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

bool weakly_northwest(Box a, Box b) { return a.row <= b.row && a.col <= b.col; }

// Trace that stops (instead of throwing) at the first invalid step.
struct PartialTrace {
  std::optional<SwitchTrace> trace;
  int failed_step = -1;
};

PartialTrace try_trace(const IncreasingTableau& t, const std::vector<SlideStep>& slides,
                       const AmbientRectangle& ambient) {
  try {
    return {switch_trace(t, slides, ambient), -1};
  } catch (const SlideError& e) {
    return {std::nullopt, e.step()};
  }
}

std::vector<std::vector<Box>> corner_choices(const std::vector<Box>& corners, bool single) {
  std::vector<std::vector<Box>> out;
  if (single) {
    for (Box b : corners) out.push_back({b});
    return out;
  }
  const std::size_t subsets = std::size_t{1} << corners.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<Box> pick;
    for (std::size_t i = 0; i < corners.size(); ++i)
      if (mask & (std::size_t{1} << i)) pick.push_back(corners[i]);
    out.push_back(std::move(pick));
  }
  return out;
}

std::optional<IncreasingTableau> try_krect_candidates(const IncreasingTableau& t, const Partition& lambda,
                                                      IncreasingTableau& order1, IncreasingTableau& order2,
                                                      IncreasingTableau& result1, IncreasingTableau& result2) {
  std::vector<IncreasingTableau> orders{superstandard(lambda)};
  for (const IncreasingTableau& s : enumerate_increasing(SkewShape(lambda), alphabet_upto(lambda.size()), true))
    if (s != orders.front()) orders.push_back(s);
  std::vector<IncreasingTableau> results;
  for (const IncreasingTableau& o : orders) results.push_back(krect(t, o));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (results[i] != results[j]) {
        order1 = orders[i];
        order2 = orders[j];
        result1 = results[i];
        result2 = results[j];
        return t;
      }
  return std::nullopt;
}

// Places the 2 / 1 4 / 1 3 seed around the first row that is shorter than
// the row above it. Returns nullopt when the rows do not leave room.
std::optional<IncreasingTableau> seed_tableau(const Partition& lambda) {
  const int ell = lambda.length();
  int r = 2;
  while (r <= ell && lambda.row(r - 1) == lambda.row(r)) ++r;
  int a = 0;
  int b = 0;
  if (r <= ell) {
    a = lambda.row(r - 1);
    b = lambda.row(r);
  } else {
    return std::nullopt;
  }
  int i0 = 1;
  while (lambda.row(i0) != a) ++i0;

  std::map<Box, int> cells{{{i0, a + 1}, 2}, {{r, b + 1}, 1}, {{r, b + 2}, 4}};
  if (r < ell) {
    cells[{r + 1, lambda.row(r + 1) + 1}] = 3;
    cells[{ell + 1, 1}] = 1;
  } else {
    cells[{ell + 1, 1}] = 1;
    cells[{ell + 1, 2}] = 3;
  }
  std::vector<int> outer = lambda.vec();
  outer.resize(static_cast<std::size_t>(ell + 1), 0);
  for (const auto& [box, v] : cells) {
    if (box.col != outer[static_cast<std::size_t>(box.row - 1)] + 1) return std::nullopt;
    outer[static_cast<std::size_t>(box.row - 1)] = box.col;
  }
  std::vector<std::vector<int>> rows(outer.size());
  for (const auto& [box, v] : cells) rows[static_cast<std::size_t>(box.row - 1)].push_back(v);
  try {
    return IncreasingTableau(SkewShape(Partition(outer), lambda), std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool within_one(const Partition& lambda, const Partition& nu) {
  return nu.length() <= lambda.length() + 1 && nu.width() <= lambda.width() + 1;
}

}  // namespace

DualEquivalenceVerdict check_strong_dual_equivalence(const IncreasingTableau& a, const IncreasingTableau& b,
                                                     const std::vector<SlideStep>& slides,
                                                     const AmbientRectangle& ambient) {
  if (a.shape() != b.shape()) throw ShapeError("strong dual equivalence compares tableaux of one shape");
  const PartialTrace ta = try_trace(a, slides, ambient);
  const PartialTrace tb = try_trace(b, slides, ambient);
  if (!ta.trace && !tb.trace && ta.failed_step == tb.failed_step)
    throw SlideError("slide step " + std::to_string(ta.failed_step) + " is invalid for both tableaux",
                     ta.failed_step);

  DualEquivalenceVerdict verdict;
  if (!ta.trace || !tb.trace) {
    // The shapes separated before the failing step, so some state differs.
    const SwitchTrace& ok = ta.trace ? *ta.trace : *tb.trace;
    const int failed = ta.trace ? tb.failed_step : ta.failed_step;
    int stage = 0;
    while (stage < static_cast<int>(ok.states.size()) && ok.states[static_cast<std::size_t>(stage)].slide < failed)
      ++stage;
    verdict.equivalent = false;
    verdict.divergent_stage = stage;
    verdict.detail = "slide " + std::to_string(failed) + " is valid for only one of the tableaux";
    return verdict;
  }
  const auto& sa = ta.trace->states;
  const auto& sb = tb.trace->states;
  const std::size_t common = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (sa[i].configuration() != sb[i].configuration()) {
      verdict.equivalent = false;
      verdict.divergent_stage = static_cast<int>(i);
      verdict.detail = "configurations differ at state " + std::to_string(i) + " (slide " +
                       std::to_string(sa[i].slide) + ")";
      return verdict;
    }
  }
  if (sa.size() != sb.size()) {
    verdict.equivalent = false;
    verdict.divergent_stage = static_cast<int>(common);
    verdict.detail = "switch sequences have different lengths";
  }
  return verdict;
}

std::vector<std::vector<SlideStep>> slide_sequences(const IncreasingTableau& reference,
                                                    const AmbientRectangle& ambient, int max_length,
                                                    const SlideSequenceOptions& options) {
  std::vector<std::vector<SlideStep>> out;
  std::vector<SlideStep> current;
  auto grow = [&](auto&& self, const IncreasingTableau& t) -> void {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_length) return;
    if (options.forward)
      for (const auto& corners : corner_choices(inner_corners(t.shape()), options.single_corner)) {
        current.push_back({SlideDirection::kForward, corners});
        self(self, kjdt_slide(t, corners));
        current.pop_back();
      }
    if (options.reverse)
      for (const auto& corners : corner_choices(outer_corners(t.shape(), ambient), options.single_corner)) {
        current.push_back({SlideDirection::kReverse, corners});
        self(self, rev_kjdt_slide(t, corners, ambient));
        current.pop_back();
      }
  };
  grow(grow, reference);
  return out;
}

OriginReport verify_origin_invariants(const SwitchTrace& trace) {
  OriginReport report;
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const int stage = static_cast<int>(i);
    if (!trace.uniform[i]) {
      report.violations.push_back({stage, "uniform", "a ribbon mixed boxes of different origin"});
      continue;
    }
    if (!trace.origins[i]) continue;
    const SwitchTrace::OriginMap& origin = *trace.origins[i];
    const SwitchState& state = trace.states[i];
    for (const auto& [alpha, va] : state.numbers)
      for (const auto& [beta, vb] : state.numbers) {
        const Box oa = origin.at(alpha);
        const Box ob = origin.at(beta);
        if (oa.row == ob.row && ob.col > oa.col && !(beta.col > alpha.col && beta.row <= alpha.row))
          report.violations.push_back({stage, "row-order",
                                       box_text(beta) + " should be strictly east and weakly north of " +
                                           box_text(alpha)});
        if (oa.col == ob.col && ob.row > oa.row && !(beta.row > alpha.row && beta.col <= alpha.col))
          report.violations.push_back({stage, "column-order",
                                       box_text(beta) + " should be strictly south and weakly west of " +
                                           box_text(alpha)});
      }
    for (Box bullet : state.bullets) {
      const Box north{bullet.row - 1, bullet.col};
      const Box west{bullet.row, bullet.col - 1};
      auto n = origin.find(north);
      auto w = origin.find(west);
      if (n == origin.end() || w == origin.end()) continue;
      if (!weakly_northwest(n->second, w->second) && !weakly_northwest(w->second, n->second))
        report.violations.push_back({stage, "bullet-neighbors",
                                     "origins " + box_text(n->second) + " and " + box_text(w->second) +
                                         " around the bullet at " + box_text(bullet) + " are incomparable"});
    }
  }
  return report;
}

IncreasingTableau transpose(const IncreasingTableau& t) {
  const SkewShape shape(t.shape().outer().conjugate(), t.shape().inner().conjugate());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
  std::vector<std::pair<Box, int>> cells;
  for (const auto& [box, v] : t.entries()) cells.push_back({{box.col, box.row}, v});
  std::sort(cells.begin(), cells.end());
  for (const auto& [box, v] : cells) rows[static_cast<std::size_t>(box.row - 1)].push_back(v);
  return IncreasingTableau(shape, std::move(rows));
}

Counterexample nonrect_counterexample(const Partition& lambda) {
  if (lambda.empty() || lambda.is_rectangle())
    throw ShapeError("counterexamples need a non-rectangular shape, got " + lambda.to_string());

  Counterexample out;
  out.lambda = lambda;
  auto finish = [&](const IncreasingTableau& t, const std::string& method) {
    if (!try_krect_candidates(t, lambda, out.order1, out.order2, out.result1, out.result2)) return false;
    if (!within_one(lambda, t.shape().outer()))
      throw InternalError("counterexample shape " + t.shape().outer().to_string() + " is too large");
    out.nu = t.shape().outer();
    out.tableau = t;
    out.method = method;
    return true;
  };

  if (auto t = seed_tableau(lambda); t && finish(*t, "seed")) return out;
  if (auto t = seed_tableau(lambda.conjugate()); t && finish(transpose(*t), "conjugate-seed")) return out;

  // Search the fillings of nu/lambda for nu at most one row and column larger.
  const int rows = lambda.length() + 1;
  const int cols = lambda.width() + 1;
  for (int extra = 1; extra <= rows + cols - 1; ++extra)
    for (const Partition& nu : partitions_in_rectangle(rows, cols)) {
      if (nu.size() != lambda.size() + extra || !nu.contains(lambda)) continue;
      for (int m = 1; m <= std::min(extra, 5); ++m)
        for (const IncreasingTableau& t : enumerate_increasing(SkewShape(nu, lambda), alphabet_upto(m), true))
          if (finish(t, "search")) return out;
    }
  throw InternalError("no counterexample found for " + lambda.to_string());
}

std::vector<IncreasingTableau> rectification_orders(const Partition& inner, int max_label) {
  return enumerate_increasing(SkewShape(inner), alphabet_upto(max_label), false);
}

bool CountIndependenceReport::uniform() const {
  return std::all_of(groups.begin(), groups.end(), [](const CountGroup& g) { return g.uniform; });
}

bool CountIndependenceReport::uniform_within_value_sets() const {
  return std::all_of(groups.begin(), groups.end(), [](const CountGroup& g) { return g.uniform_within_value_sets; });
}

std::string CountIndependenceReport::to_string() const {
  std::ostringstream os;
  os << groups.size() << " groups, " << total << " tableaux\n";
  for (const CountGroup& g : groups) {
    os << "shape " << g.shape.to_string() << "  multiplicity " << g.multiplicity
       << (g.uniform ? "  uniform" : "  NOT uniform") << '\n';
    for (const auto& [target, n] : g.targets) {
      std::string flat = target.to_string();
      std::replace(flat.begin(), flat.end(), '\n', '/');
      os << "  " << flat << "  x" << n << '\n';
    }
  }
  return os.str();
}

CountIndependenceReport check_count_independence(const SkewShape& shape, const std::vector<int>& alphabet) {
  if (!shape.inner().empty() && !shape.inner().is_rectangle())
    throw ShapeError("count independence needs a rectangular inner shape");
  const RectificationHistogram histogram = rectification_histogram(shape, alphabet, false);
  std::set<Partition> shapes;
  CountIndependenceReport report;
  for (const auto& [target, n] : histogram) {
    shapes.insert(target.shape().outer());
    report.total += n;
  }
  for (const Partition& p : shapes) {
    CountGroup group;
    group.shape = p;
    std::map<std::vector<int>, Coefficient> per_value_set;
    bool first = true;
    for (const IncreasingTableau& target : enumerate_increasing(SkewShape(p), alphabet, false)) {
      auto it = histogram.find(target);
      const Coefficient n = it == histogram.end() ? 0 : it->second;
      group.targets.push_back({target, n});
      if (first) group.multiplicity = n;
      first = false;
      if (n != group.multiplicity) group.uniform = false;
      auto [slot, fresh] = per_value_set.emplace(target.values(), n);
      if (!fresh && slot->second != n) group.uniform_within_value_sets = false;
    }
    report.groups.push_back(std::move(group));
  }
  return report;
}

SuperstandardReport check_superstandard_independence(const IncreasingTableau& t, int max_label) {
  const Partition& inner = t.shape().inner();
  if (max_label <= 0) max_label = inner.size() + 1;
  SuperstandardReport report;
  std::optional<IncreasingTableau> super;
  for (const IncreasingTableau& order : rectification_orders(inner, max_label)) {
    IncreasingTableau result = krect(t, order);
    if (is_superstandard(result)) {
      report.any_superstandard = true;
      if (!super) super = result;
    }
    report.results.push_back({order, std::move(result)});
  }
  if (super)
    for (const auto& [order, result] : report.results)
      if (result != *super) report.consistent = false;
  return report;
}

}  // namespace kjdt

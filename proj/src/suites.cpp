#include "kjdt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "kjdt/enumerate.hpp"
#include "kjdt/io.hpp"
#include "kjdt/jdt.hpp"
#include "kjdt/products.hpp"

namespace kjdt {

namespace {

constexpr std::size_t kMaxFailureLines = 25;

std::string triple(const Partition& a, const Partition& b, const Partition& c) {
  return a.to_string() + " " + b.to_string() + " " + c.to_string();
}

CoefficientRecord make_record(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                              const Partition& nu, Coefficient value, std::string method) {
  CoefficientRecord r;
  r.kind = kind;
  r.lambda = lambda;
  r.mu = mu;
  r.nu = nu;
  r.value = value;
  r.method = std::move(method);
  return r;
}

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

std::vector<DirectSumFrame> small_frames() {
  std::vector<DirectSumFrame> frames;
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 2; ++k2)
      for (int n1 = k1 + 1; n1 <= 4; ++n1)
        for (int n2 = k2 + 1; n2 <= 4; ++n2) frames.emplace_back(k1, n1, k2, n2);
  return frames;
}

// Distinct (lambda, mu, nu) with lambda, mu, nu fitting some small frame.
std::vector<std::tuple<Partition, Partition, Partition, DirectSumFrame>> frame_triples() {
  std::vector<std::tuple<Partition, Partition, Partition, DirectSumFrame>> out;
  std::set<std::string> seen;
  for (const auto& f : small_frames()) {
    for (const auto& lambda : partitions_in_rectangle(f.k1, f.n1 - f.k1))
      for (const auto& mu : partitions_in_rectangle(f.k2, f.n2 - f.k2))
        for (const auto& nu : partitions_in_rectangle(f.k(), f.n() - f.k())) {
          if (nu.size() < lambda.size() + mu.size()) continue;
          if (!seen.insert(triple(lambda, mu, nu)).second) continue;
          out.emplace_back(lambda, mu, nu, f);
        }
  }
  return out;
}

std::vector<std::pair<int, int>> small_rectangles() {
  std::vector<std::pair<int, int>> out;
  for (int c = 1; c <= 3; ++c)
    for (int d = 1; d <= 3; ++d)
      if (c * d <= 6) out.emplace_back(c, d);
  return out;
}

// Increasing tableaux of a c x d rectangle used as inputs to the equivalence
// checks: all fillings from 1..4 plus all standard ones.
std::vector<IncreasingTableau> rectangle_fillings(int c, int d) {
  const SkewShape shape(Partition::rectangle(c, d), Partition());
  auto out = enumerate_increasing(shape, alphabet_upto(4), false);
  if (c * d > 4) {
    auto standard = enumerate_increasing(shape, alphabet_upto(c * d), true);
    out.insert(out.end(), standard.begin(), standard.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string steps_string(const std::vector<SlideStep>& steps) {
  std::string s;
  for (const auto& step : steps) {
    s += step.direction == SlideDirection::kForward ? "F" : "R";
    for (const auto& b : step.corners) s += "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
    s += " ";
  }
  return s.empty() ? "-" : s;
}

Partition random_subpartition(const Partition& nu, std::mt19937_64& rng) {
  Partition p = nu;
  std::uniform_int_distribution<int> keep(0, nu.size());
  const int target = keep(rng);
  while (p.size() > target) {
    auto corners = p.removable_corners();
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    p = p.without_box(corners[pick(rng)]);
  }
  return p;
}

// Grid text on one line, rows separated by '/'.
std::string flat(const IncreasingTableau& t) {
  std::string s = format_tableau(t);
  std::replace(s.begin(), s.end(), '\n', '/');
  return s;
}

template <class T>
std::vector<T> random_nonempty_subset(const std::vector<T>& items, std::mt19937_64& rng) {
  std::vector<T> out;
  while (out.empty()) {
    out.clear();
    for (const auto& x : items)
      if (rng() & 1U) out.push_back(x);
  }
  return out;
}

}  // namespace

void SuiteResult::fail(const std::string& line) {
  if (passed || lines.size() < kMaxFailureLines) lines.push_back("FAIL " + line);
  passed = false;
}

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checked;
  if (!ok) fail(what);
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json witness = nullptr;
  for (const auto& line : lines)
    if (line.rfind("FAIL ", 0) == 0) {
      witness = line.substr(5);
      break;
    }
  return {{"check", name},
          {"instance", {{"checked", checked}}},
          {"verdict", passed ? "pass" : "fail"},
          {"witness", witness},
          {"lines", lines}};
}

IncreasingTableau random_increasing(const SkewShape& shape, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> gap(0, spread);
  std::vector<std::vector<int>> rows;
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  for (int r = 1; r <= outer.length(); ++r) {
    std::vector<int> row;
    for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) {
      int least = 1;
      if (!row.empty()) least = std::max(least, row.back() + 1);
      if (r > 1 && shape.contains({r - 1, c}))
        least = std::max(least, rows[static_cast<std::size_t>(r - 2)]
                                     [static_cast<std::size_t>(c - inner.row(r - 1) - 1)] + 1);
      row.push_back(least + gap(rng));
    }
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(shape, std::move(rows));
}

SuiteResult suite_star_table() {
  SuiteResult res;
  res.name = "star-table";
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, Coefficient>> golden = {
      {"1 2/2/3", 1},   {"1 3/2/3", 1},     {"1 2/2 3", 1},   {"1 2/3", 1},     {"1 3/2", 1},
      {"1 2/2", 1},     {"1 3/3", 1},       {"2 3/3", 1},     {"1 2 3/2/3", 1}, {"1 2/2 3/3", 1},
      {"1 2 3/2 3", 1}, {"1 2 3/3", 2},     {"1 2 3/2", 2}};
  RectificationHistogram expected;
  for (const auto& [text, n] : golden) expected[parse_increasing(text)] = n;

  const Partition two({2}), two_one({2, 1});
  for (const auto& shape : {star(two, two_one), star(two_one, two)}) {
    const std::string where = shape.to_string();
    const auto all = enumerate_increasing(shape, alphabet_upto(3), false);
    res.expect(all.size() == 15, where + ": " + std::to_string(all.size()) + " tableaux, expected 15");
    const auto hist = rectification_histogram(shape, alphabet_upto(3), false);
    res.expect(hist == expected, where + ": rectification table differs from the expected table");
    const auto report = check_count_independence(shape, alphabet_upto(3));
    res.expect(report.groups.size() == 7, where + ": " + std::to_string(report.groups.size()) + " shape groups");
    res.expect(report.uniform(), where + ": counts not uniform\n" + report.to_string());
    res.note(where + "\n" + report.to_string());
  }

  const std::vector<std::pair<std::string, std::string>> displayed = {
      {". . 1 2/1 2/3", "1 2/2/3"},     {". . 1 3/2 3/3", "1 3/2/3"},   {". . 1 2/1 3/2", "1 2/2 3"},
      {". . 1 2/1 3/3", "1 2/3"},       {". . 1 3/1 3/2", "1 3/2"},     {". . 1 2/1 2/2", "1 2/2"},
      {". . 1 3/1 3/3", "1 3/3"},       {". . 2 3/2 3/3", "2 3/3"},     {". . 1 3/1 2/3", "1 2 3/2/3"},
      {". . 1 2/2 3/3", "1 2/2 3/3"},   {". . 2 3/1 3/2", "1 2 3/2 3"}, {". . 2 3/1 2/3", "1 2 3/3"},
      {". . 2 3/1 3/3", "1 2 3/3"},     {". . 2 3/1 2/2", "1 2 3/2"},   {". . 1 3/1 2/2", "1 2 3/2"}};
  for (const auto& [t, target] : displayed) {
    const auto got = krect(parse_increasing(t));
    res.expect(got == parse_increasing(target), "krect(" + t + ") = " + flat(got) + ", expected " + target);
  }

  const Partition three_one({3, 1});
  const Coefficient d1 = coeff_D(two, two_one, three_one);
  const Coefficient d2 = coeff_D(two_one, two, three_one);
  res.expect(d1 == -2, "D([2],[2,1],[3,1]) = " + std::to_string(d1));
  res.expect(d2 == -2, "D([2,1],[2],[3,1]) = " + std::to_string(d2));
  res.records.push_back(make_record(CoefficientKind::D, two, two_one, three_one, d1, "jdt"));
  res.records.push_back(make_record(CoefficientKind::D, two_one, two, three_one, d2, "jdt"));

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  res.note("D([2],[2,1],[3,1]) = " + std::to_string(d1));
  return res;
}

SuiteResult suite_buch() {
  SuiteResult res;
  res.name = "buch";
  for (const auto& [lambda, mu, nu, frame] : frame_triples()) {
    const Coefficient d = coeff_D(lambda, mu, nu);
    const Coefficient b = coeff_D_buch(lambda, mu, nu);
    res.expect(d == b, "D" + triple(lambda, mu, nu) + ": jdt " + std::to_string(d) + ", set-valued " +
                           std::to_string(b));
    auto rec = make_record(CoefficientKind::D, lambda, mu, nu, d, "jdt");
    rec.checks.emplace_back("buch", d == b);
    res.records.push_back(std::move(rec));
  }
  res.note(std::to_string(res.checked) + " triples");
  return res;
}

SuiteResult suite_identity() {
  SuiteResult res;
  res.name = "identity";
  for (const auto& frame : small_frames()) {
    const Partition omega_dual = dual_in_rectangle(omega(frame), AmbientRectangle(frame.k(), frame.n()));
    for (const auto& lambda : partitions_in_rectangle(frame.k1, frame.n1 - frame.k1))
      for (const auto& mu : partitions_in_rectangle(frame.k2, frame.n2 - frame.k2))
        for (const auto& nu : partitions_in_rectangle(frame.k(), frame.n() - frame.k())) {
          if (nu.size() < lambda.size() + mu.size()) continue;
          const Coefficient d = coeff_D(lambda, mu, nu);
          const Coefficient via = coeff_D_via_identity(lambda, mu, nu, frame);
          res.expect(d == via, "frame [" + std::to_string(frame.k1) + "," + std::to_string(frame.n1) + "," +
                                   std::to_string(frame.k2) + "," + std::to_string(frame.n2) + "] D" +
                                   triple(lambda, mu, nu) + " = " + std::to_string(d) + ", C side " +
                                   std::to_string(via));
          const Partition dag = dagger(lambda, mu, frame);
          res.records.push_back(make_record(CoefficientKind::C, omega_dual, nu, dag, via, "jdt"));
        }
  }
  res.note(std::to_string(res.checked) + " frame instances");
  return res;
}

SuiteResult suite_ideal_sheaf() {
  SuiteResult res;
  res.name = "ideal-sheaf";
  const Partition one({1}), two_one({2, 1});
  const Coefficient e = coeff_E(one, one, two_one);
  const Coefficient via = coeff_E_via_C(one, one, two_one);
  res.expect(e == -3, "E([1],[1],[2,1]) = " + std::to_string(e));
  res.expect(via == -3, "rook-strip sum for E([1],[1],[2,1]) = " + std::to_string(via));
  res.records.push_back(make_record(CoefficientKind::E, one, one, two_one, e, "augmented-jdt"));

  std::set<AugmentedTableau> expected = {parse_augmented(". 1/1"), parse_augmented(". 1/X"),
                                         parse_augmented(". X/1")};
  std::set<AugmentedTableau> witnesses;
  for (const auto& a : enumerate_augmented(SkewShape(two_one, one), alphabet_upto(1)))
    if (krect(a.erase_marks()) == superstandard(one)) witnesses.insert(a);
  res.expect(witnesses == expected, "witness set for E([1],[1],[2,1]) has " + std::to_string(witnesses.size()) +
                                        " members or differs");
  for (const auto& w : witnesses) {
    std::string line = w.to_string();
    std::replace(line.begin(), line.end(), '\n', '/');
    res.note(line);
  }

  for (const auto& nu : partitions_upto(5))
    for (const auto& lambda : partitions_upto(nu.size())) {
      if (!nu.contains(lambda)) continue;
      for (const auto& mu : partitions_upto(nu.size() - lambda.size())) {
        const Coefficient a = coeff_E(lambda, mu, nu);
        const Coefficient b = coeff_E_via_C(lambda, mu, nu);
        res.expect(a == b, "E" + triple(lambda, mu, nu) + ": augmented " + std::to_string(a) + ", rook-strip " +
                               std::to_string(b));
        res.records.push_back(make_record(CoefficientKind::E, lambda, mu, nu, a, "augmented-jdt"));
      }
    }
  return res;
}

SuiteResult suite_rect_orders() {
  SuiteResult res;
  res.name = "rect-orders";
  for (const auto& [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {2, 3}}) {
    const Partition rect = Partition::rectangle(c, d);
    const auto orders = rectification_orders(rect, c * d + 1);
    std::int64_t instances = 0;
    for (const auto& nu : partitions_upto(8)) {
      if (!nu.contains(rect)) continue;
      for_each_increasing(SkewShape(nu, rect), alphabet_upto(4), false, [&](const IncreasingTableau& t) {
        const auto base = krect(t, orders.front());
        for (std::size_t i = 1; i < orders.size(); ++i) {
          const auto other = krect(t, orders[i]);
          res.expect(other == base, flat(t) + " rectifies to " + flat(base) + " and " +
                                        flat(other));
        }
        ++instances;
      });
    }
    res.note(rect.to_string() + ": " + std::to_string(instances) + " tableaux, " + std::to_string(orders.size()) +
             " orders");
  }
  return res;
}

SuiteResult suite_superstandard() {
  SuiteResult res;
  res.name = "superstandard";
  for (const auto& lambda : {Partition({2, 1}), Partition({3, 1}), Partition({2, 1, 1}), Partition({3, 2})}) {
    std::int64_t hits = 0;
    for (const auto& nu : partitions_upto(7)) {
      if (!nu.contains(lambda) || nu == lambda) continue;
      for_each_increasing(SkewShape(nu, lambda), alphabet_upto(4), false, [&](const IncreasingTableau& t) {
        const auto report = check_superstandard_independence(t);
        if (report.any_superstandard) ++hits;
        res.expect(report.consistent, flat(t) + ": some order rectifies to a superstandard tableau "
                                                          "and another does not agree");
      });
    }
    res.note(lambda.to_string() + ": " + std::to_string(hits) + " tableaux reach a superstandard result");
  }
  return res;
}

SuiteResult suite_dual_equivalence() {
  SuiteResult res;
  res.name = "dual-equivalence";
  const AmbientRectangle ambient = AmbientRectangle::of_size(4, 5);
  for (const auto& [c, d] : small_rectangles()) {
    const auto tabs = rectangle_fillings(c, d);
    const auto sequences = slide_sequences(tabs.front(), ambient, 3);
    for (std::size_t i = 1; i < tabs.size(); ++i)
      for (const auto& seq : sequences) {
        const auto verdict = check_strong_dual_equivalence(tabs.front(), tabs[i], seq, ambient);
        res.expect(verdict.equivalent, flat(tabs.front()) + " vs " + flat(tabs[i]) +
                                           " under " + steps_string(seq) + ": " + verdict.detail);
      }
    res.note(std::to_string(c) + "x" + std::to_string(d) + ": " + std::to_string(tabs.size()) + " tableaux, " +
             std::to_string(sequences.size()) + " sequences");
  }

  // Non-rectangular shapes: two standard fillings separated by one reverse slide.
  const auto a = parse_increasing("1 2/3");
  const auto b = parse_increasing("1 3/2");
  const std::vector<SlideStep> seq = {{SlideDirection::kReverse, {{2, 2}}}};
  const auto verdict = check_strong_dual_equivalence(a, b, seq, AmbientRectangle::of_size(2, 2));
  res.expect(!verdict.equivalent, "[1,2/3] and [1,3/2] stay equivalent under a reverse slide at (2,2)");
  if (!verdict.equivalent) res.note("[1,2/3] vs [1,3/2]: " + verdict.detail);

  for (int n = 3; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.is_rectangle()) continue;
      const auto standard = enumerate_increasing(SkewShape(lambda, Partition()), alphabet_upto(n), true);
      const AmbientRectangle amb = AmbientRectangle::of_size(lambda.length() + 1, lambda.width() + 1);
      const auto corners = outer_corners(SkewShape(lambda, Partition()), amb);
      bool found = false;
      for (std::size_t i = 0; i < standard.size() && !found; ++i)
        for (std::size_t j = i + 1; j < standard.size() && !found; ++j)
          for (const auto& corner : corners) {
            const std::vector<SlideStep> one = {{SlideDirection::kReverse, {corner}}};
            if (!check_strong_dual_equivalence(standard[i], standard[j], one, amb).equivalent) {
              found = true;
              break;
            }
          }
      res.expect(found, lambda.to_string() + ": no pair of standard fillings diverges under one reverse slide");
    }
  return res;
}

SuiteResult suite_origin_invariants() {
  SuiteResult res;
  res.name = "origin-invariants";
  const AmbientRectangle ambient = AmbientRectangle::of_size(4, 5);
  for (bool single : {true, false}) {
    for (const auto& [c, d] : small_rectangles()) {
      const auto tabs = rectangle_fillings(c, d);
      const auto sequences = slide_sequences(tabs.front(), ambient, 3, {false, true, single});
      for (const auto& t : tabs)
        for (const auto& seq : sequences) {
          const auto report = verify_origin_invariants(switch_trace(t, seq, ambient));
          std::string detail;
          if (!report.clean())
            detail = report.violations.front().invariant + " at state " +
                     std::to_string(report.violations.front().stage) + ": " + report.violations.front().detail;
          res.expect(report.clean(), flat(t) + " under " + steps_string(seq) + ": " + detail);
        }
    }
  }

  // Shape (5,4,2,1) with a bullet at (3,3): its two numeric neighbors are
  // incomparable in the northwest order.
  const Partition lambda({5, 4, 2, 1});
  const auto a = superstandard(lambda);
  const auto b = transpose(superstandard(lambda.conjugate()));
  const std::vector<SlideStep> seq = {{SlideDirection::kReverse, {{3, 3}}}};
  const AmbientRectangle amb = AmbientRectangle::of_size(5, 6);
  bool violated = false;
  for (const auto& t : {a, b}) {
    const auto report = verify_origin_invariants(switch_trace(t, seq, amb));
    for (const auto& v : report.violations)
      if (v.invariant == "bullet-neighbors") violated = true;
  }
  res.expect(violated, "no bullet-neighbor violation for (5,4,2,1) at (3,3)");
  const auto verdict = check_strong_dual_equivalence(a, b, seq, amb);
  res.expect(!verdict.equivalent, "(5,4,2,1) fillings stay equivalent under a reverse slide at (3,3)");
  return res;
}

SuiteResult suite_sharpness() {
  SuiteResult res;
  res.name = "sharpness";
  std::map<std::string, int> methods;
  for (int n = 3; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.is_rectangle()) continue;
      Counterexample ce;
      try {
        ce = nonrect_counterexample(lambda);
      } catch (const std::exception& e) {
        res.fail(lambda.to_string() + ": " + e.what());
        continue;
      }
      ++methods[ce.method];
      const auto r1 = krect(ce.tableau, ce.order1);
      const auto r2 = krect(ce.tableau, ce.order2);
      res.expect(r1 != r2, lambda.to_string() + ": both orders give " + flat(r1));
      res.expect(r1 == ce.result1 && r2 == ce.result2, lambda.to_string() + ": reported results do not reproduce");
      res.expect(ce.tableau.shape().inner() == lambda && ce.tableau.shape().outer() == ce.nu,
                 lambda.to_string() + ": tableau has the wrong shape");
      res.expect(ce.nu.length() <= lambda.length() + 1 && ce.nu.width() <= lambda.width() + 1,
                 lambda.to_string() + ": outer shape " + ce.nu.to_string() + " too large");
    }
  for (const auto& [m, count] : methods) res.note(m + ": " + std::to_string(count));

  const auto t = parse_increasing(". . 2/. 1 4/1 3");
  const auto p = krect(t, parse_increasing("1 2/3"));
  const auto q = krect(t, parse_increasing("1 3/2"));
  res.expect(p == parse_increasing("1 2 4/3"), "first order gives " + flat(p));
  res.expect(q == parse_increasing("1 2 4/3 4"), "second order gives " + flat(q));
  const auto small = nonrect_counterexample(Partition({2, 1}));
  res.expect(small.tableau == t, "[2,1] counterexample is " + flat(small.tableau));

  const auto big = nonrect_counterexample(Partition({6, 6, 3, 1}));
  res.expect(big.nu == Partition({7, 6, 5, 2, 1}), "[6,6,3,1] counterexample has outer shape " + big.nu.to_string());
  res.expect(big.tableau == parse_increasing(". . . . . . 2/. . . . . ./. . . 1 4/. 3/1"),
             "[6,6,3,1] counterexample is " + flat(big.tableau));
  res.expect(big.result1 != big.result2, "[6,6,3,1] orders agree");
  return res;
}

SuiteResult suite_involution(const SuiteOptions& options) {
  SuiteResult res;
  res.name = "involution";
  std::mt19937_64 rng(options.seed);
  auto shapes = partitions_upto(9);
  shapes.erase(shapes.begin());
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  for (int i = 0; i < options.instances; ++i) {
    const Partition nu = shapes[pick(rng)];
    const Partition lambda = random_subpartition(nu, rng);
    const Partition kappa = (rng() & 1U) ? Partition() : random_subpartition(lambda, rng);
    const auto a = random_increasing(SkewShape(lambda, kappa), rng, 2);
    const auto b = random_increasing(SkewShape(nu, lambda), rng, 2);
    const auto once = kinfusion(a, b);
    const auto twice = kinfusion(once.first, once.second);
    res.expect(twice.first == a && twice.second == b,
               "kinfusion not an involution on " + flat(a) + " | " + flat(b));

    if (!lambda.empty()) {
      const auto corners = random_nonempty_subset(inner_corners(b.shape()), rng);
      const auto out = kjdt_slide_tracked(b, corners);
      const auto back = rev_kjdt_slide(out.tableau, out.vacated, AmbientRectangle::of_size(nu.length(), nu.width()));
      res.expect(back == b, "forward then reverse slide changes " + flat(b));
    }
    const AmbientRectangle amb = AmbientRectangle::of_size(nu.length() + 1, nu.width() + 1);
    const auto corners = random_nonempty_subset(outer_corners(b.shape(), amb), rng);
    const auto out = rev_kjdt_slide_tracked(b, corners, amb);
    const auto back = kjdt_slide(out.tableau, out.vacated);
    res.expect(back == b, "reverse then forward slide changes " + flat(b));
  }
  res.note("seed " + std::to_string(options.seed) + ", " + std::to_string(options.instances) + " instances");
  return res;
}

SuiteResult suite_rev_rect() {
  SuiteResult res;
  res.name = "rev-rect";
  for (const auto& [c, d] : small_rectangles()) {
    const auto tabs = enumerate_increasing(SkewShape(Partition::rectangle(c, d), Partition()),
                                           alphabet_upto(c * d), false);
    for (int k = c; k <= 4; ++k)
      for (int m = d; m <= 5; ++m) {
        const AmbientRectangle amb = AmbientRectangle::of_size(k, m);
        std::vector<int> inner(static_cast<std::size_t>(k), m);
        for (int r = k - c; r < k; ++r) inner[static_cast<std::size_t>(r)] = m - d;
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        const SkewShape expected(amb.full(), Partition(inner));
        const Box anchor{k - c + 1, m - d + 1};
        for (const auto& t : tabs)
          for (auto choice : {CornerChoice::kFirst, CornerChoice::kLast, CornerChoice::kAll}) {
            const auto placed = rev_krect_in_ambient(t, amb, choice);
            res.expect(placed.tableau.shape() == expected && placed.anchor == anchor,
                       flat(t) + " in " + std::to_string(k) + "x" + std::to_string(m) + " lands on " +
                           placed.tableau.shape().to_string());
          }
      }
  }
  return res;
}

SuiteResult suite_products() {
  SuiteResult res;
  res.name = "products";
  const auto t = parse_increasing("1 2 3/2 4 5");
  const auto u = parse_increasing("1 2");
  const auto one = parse_increasing("1");
  const auto two = parse_increasing("2");
  const auto tu = odot(t, u);
  res.expect(tu == parse_increasing("1 2 3/2 3 5/4 5"), "T odot [1,2] = " + flat(tu));
  const auto td = diamond(t, u);
  res.expect(td == parse_increasing("1 2 3/2 3 5/4"), "T diamond [1,2] = " + flat(td));
  const auto left = odot(odot(t, one), two);
  const auto right = odot(t, odot(one, two));
  res.expect(left == td, "(T odot [1]) odot [2] = " + flat(left));
  res.expect(odot(one, two) == u, "[1] odot [2] = " + flat(odot(one, two)));
  res.expect(left != right, "odot is associative on this instance");
  res.expect(hecke_insert(one, 1) == one, "[1] <- 1");
  res.expect(hecke_insert(one, 2) == u, "[1] <- 2");
  res.note("T odot [1,2] = " + flat(tu));
  res.note("T diamond [1,2] = " + flat(td));
  return res;
}

SuiteResult suite_classical() {
  SuiteResult res;
  res.name = "classical";
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& lambda : partitions_of(a))
        for (const auto& mu : partitions_of(n - a))
          for (const auto& nu : partitions_of(n)) {
            const Coefficient cc = coeff_C(lambda, mu, nu);
            const Coefficient dd = coeff_D(lambda, mu, nu);
            const Coefficient lr = coeff_c_classical(lambda, mu, nu);
            const Coefficient sc = schur_product_coefficient(lambda, mu, nu);
            res.expect(cc == dd && dd == lr && lr == sc,
                       triple(lambda, mu, nu) + ": C " + std::to_string(cc) + ", D " + std::to_string(dd) +
                           ", c " + std::to_string(lr) + ", schur " + std::to_string(sc));
            res.records.push_back(make_record(CoefficientKind::C, lambda, mu, nu, cc, "jdt"));
            res.records.push_back(make_record(CoefficientKind::D, lambda, mu, nu, dd, "jdt"));
            res.records.push_back(make_record(CoefficientKind::c, lambda, mu, nu, lr, "standard-jdt"));
          }
  return res;
}

std::vector<std::string> suite_names() {
  return {"star-table", "buch",      "identity", "ideal-sheaf", "rect-orders", "superstandard", "dual-equivalence",
          "origin-invariants", "sharpness", "involution", "rev-rect", "products", "classical"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "star-table") return suite_star_table();
  if (name == "buch") return suite_buch();
  if (name == "identity") return suite_identity();
  if (name == "ideal-sheaf") return suite_ideal_sheaf();
  if (name == "rect-orders") return suite_rect_orders();
  if (name == "superstandard") return suite_superstandard();
  if (name == "dual-equivalence") return suite_dual_equivalence();
  if (name == "origin-invariants") return suite_origin_invariants();
  if (name == "sharpness") return suite_sharpness();
  if (name == "involution") return suite_involution(options);
  if (name == "rev-rect") return suite_rev_rect();
  if (name == "products") return suite_products();
  if (name == "classical") return suite_classical();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace kjdt

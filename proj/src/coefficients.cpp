#include "kjdt/coefficients.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

#include "kjdt/enumerate.hpp"

namespace kjdt {
namespace {

int g_workers = 0;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::string key_of(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Histograms shared across coefficient calls; many readers, one writer.
class MemoStore {
 public:
  using Value = std::shared_ptr<const RectificationHistogram>;

  template <typename Make>
  Value get(const std::string& key, Make make) {
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return it->second;
    }
    Value fresh = std::make_shared<const RectificationHistogram>(make());
    std::unique_lock lock(mutex_);
    return entries_.emplace(key, std::move(fresh)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::string, Value> entries_;
};

MemoStore& memo() {
  static MemoStore store;
  return store;
}

RectificationHistogram histogram_impl(const SkewShape& shape, const std::vector<int>& alphabet, bool surjective,
                                      const IncreasingTableau& order) {
  const int workers = shape.size() >= 7 ? worker_count() : 1;
  std::vector<RectificationHistogram> partial(static_cast<std::size_t>(workers));
  auto run = [&](int index) {
    RectificationHistogram& mine = partial[static_cast<std::size_t>(index)];
    for_each_increasing(
        shape, alphabet, surjective, [&](const IncreasingTableau& t) { ++mine[krect(t, order)]; },
        EnumerationSlice{index, workers});
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
  }
  RectificationHistogram total;
  for (const auto& part : partial)
    for (const auto& [target, n] : part) total[target] = checked_add(total[target], n);
  return total;
}

Coefficient lookup(const RectificationHistogram& h, const IncreasingTableau& target) {
  auto it = h.find(target);
  return it == h.end() ? 0 : it->second;
}

// Unsigned count behind the C rule.
Coefficient count_C(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda)) return 0;
  const int m = mu.size();
  const std::string key = "C" + lambda.to_string() + nu.to_string() + std::to_string(m);
  auto h = memo().get(key, [&] {
    return histogram_impl(SkewShape(nu, lambda), alphabet_upto(m), true, superstandard(lambda));
  });
  return lookup(*h, superstandard(mu));
}

Coefficient count_D(const Partition& lambda, const Partition& mu, const IncreasingTableau& target) {
  const std::vector<int> alphabet = target.values();
  const SkewShape shape = star(lambda, mu);
  if (static_cast<int>(alphabet.size()) > shape.size()) return 0;
  const std::string key = "D" + lambda.to_string() + mu.to_string() + key_of(alphabet);
  auto h = memo().get(key, [&] { return histogram_impl(shape, alphabet, true, superstandard(shape.inner())); });
  return lookup(*h, target);
}

Coefficient count_E(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda)) return 0;
  const int m = mu.size();
  const std::string key = "E" + lambda.to_string() + nu.to_string() + std::to_string(m);
  auto h = memo().get(key, [&] {
    RectificationHistogram out;
    const IncreasingTableau order = superstandard(lambda);
    for_each_augmented(SkewShape(nu, lambda), alphabet_upto(m),
                       [&](const AugmentedTableau& t) { ++out[krect(t.erase_marks(), order)]; });
    return out;
  });
  return lookup(*h, superstandard(mu));
}

// Schur polynomial oracle. Polynomials are maps from exponent vectors to
// coefficients in a fixed number of variables.
using Monomials = std::map<std::vector<int>, Coefficient>;

Monomials schur_monomials(const Partition& shape, int vars) {
  Monomials out;
  if (shape.length() > vars) return out;
  const std::vector<Box> boxes = shape.boxes();
  std::vector<std::vector<int>> grid;
  for (int len : shape.parts()) grid.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> exponent(static_cast<std::size_t>(vars), 0);
  auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };
  auto place = [&](auto&& self, std::size_t pos) -> void {
    if (pos == boxes.size()) {
      ++out[exponent];
      return;
    }
    const Box b = boxes[pos];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, at(b.row, b.col - 1));
    if (b.row > 1) lo = std::max(lo, at(b.row - 1, b.col) + 1);
    // Column strictness leaves room for the boxes below.
    const int hi = vars - (shape.conjugate().row(b.col) - b.row);
    for (int v = lo; v <= hi; ++v) {
      at(b.row, b.col) = v;
      ++exponent[static_cast<std::size_t>(v - 1)];
      self(self, pos + 1);
      --exponent[static_cast<std::size_t>(v - 1)];
    }
  };
  place(place, 0);
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) { return std::is_sorted(v.rbegin(), v.rend()); }

Monomials dominant_part(const Monomials& poly) {
  Monomials out;
  for (const auto& [e, c] : poly)
    if (weakly_decreasing(e)) out[e] = c;
  return out;
}

std::map<Partition, Coefficient> schur_product_expansion(const Partition& lambda, const Partition& mu, int vars) {
  const Monomials a = schur_monomials(lambda, vars);
  const Monomials b = schur_monomials(mu, vars);
  Monomials product;
  std::vector<int> sum(static_cast<std::size_t>(vars));
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      if (!weakly_decreasing(sum)) continue;
      product[sum] = checked_add(product[sum], checked_mul(ca, cb));
    }
  std::erase_if(product, [](const auto& kv) { return kv.second == 0; });

  std::map<Partition, Coefficient> expansion;
  while (!product.empty()) {
    const std::vector<int> lead = product.rbegin()->first;
    const Coefficient c = product.rbegin()->second;
    const Partition shape(lead);
    expansion[shape] = c;
    for (const auto& [e, k] : dominant_part(schur_monomials(shape, vars))) {
      product[e] = checked_add(product[e], -checked_mul(c, k));
      if (product[e] == 0) product.erase(e);
    }
  }
  return expansion;
}

}  // namespace

std::string kind_name(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::C: return "C";
    case CoefficientKind::D: return "D";
    case CoefficientKind::E: return "E";
    case CoefficientKind::F: return "F";
    case CoefficientKind::c: return "c";
  }
  return "?";
}

CoefficientKind parse_kind(const std::string& text) {
  if (text == "C") return CoefficientKind::C;
  if (text == "D") return CoefficientKind::D;
  if (text == "E") return CoefficientKind::E;
  if (text == "F") return CoefficientKind::F;
  if (text == "c") return CoefficientKind::c;
  throw std::invalid_argument("unknown coefficient kind '" + text + "' (expected C, D, E, F or c)");
}

bool CoefficientRecord::checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool CoefficientRecord::sign_ok() const {
  if (value == 0) return true;
  const int expected = parity_sign(std::abs(nu.size() - lambda.size() - mu.size()));
  return (value > 0) == (expected > 0);
}

void set_worker_count(int workers) { g_workers = std::max(0, workers); }

int worker_count() {
  if (g_workers > 0) return g_workers;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

RectificationHistogram rectification_histogram(const SkewShape& shape, const std::vector<int>& alphabet,
                                               bool surjective) {
  return histogram_impl(shape, alphabet, surjective, superstandard(shape.inner()));
}

RectificationHistogram rectification_histogram(const SkewShape& shape, const std::vector<int>& alphabet,
                                               bool surjective, const IncreasingTableau& order) {
  return histogram_impl(shape, alphabet, surjective, order);
}

Coefficient coeff_C(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return parity_sign(nu.size() - lambda.size() - mu.size()) * count_C(lambda, mu, nu);
}

Coefficient coeff_D(const Partition& lambda, const Partition& mu, const Partition& nu,
                    const std::optional<IncreasingTableau>& target) {
  if (target && (!target->shape().is_straight() || target->shape().outer() != nu))
    throw ShapeError("target tableau must have straight shape " + nu.to_string());
  const IncreasingTableau goal = target ? *target : superstandard(nu);
  return parity_sign(lambda.size() + mu.size() + nu.size()) * count_D(lambda, mu, goal);
}

Coefficient coeff_D_buch(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() > lambda.size() + mu.size()) return 0;
  std::vector<int> content = lambda.vec();
  content.insert(content.end(), mu.parts().begin(), mu.parts().end());
  const int p = lambda.length();
  const int q = mu.length();
  Coefficient count = 0;
  for_each_set_valued(nu, content, [&](const SetValuedTableau& t) {
    const Word w = reading_word(t);
    if (is_partial_reverse_lattice(w, 1, p) && is_partial_reverse_lattice(w, p + 1, p + q)) ++count;
  });
  return parity_sign(lambda.size() + mu.size() + nu.size()) * count;
}

Coefficient coeff_D_via_identity(const Partition& lambda, const Partition& mu, const Partition& nu,
                                 const DirectSumFrame& frame) {
  frame.total().require_fit(nu, "nu");
  const Partition omega_dual = dual_in_rectangle(omega(frame), frame.total());
  return coeff_C(omega_dual, nu, dagger(lambda, mu, frame));
}

Coefficient coeff_E(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return parity_sign(nu.size() - lambda.size() - mu.size()) * count_E(lambda, mu, nu);
}

Coefficient coeff_E_via_C(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Coefficient total = 0;
  for (const Partition& bar : rook_strip_contractions(nu))
    total = checked_add(total, parity_sign(nu.size() - bar.size()) * coeff_C(lambda, mu, bar));
  return total;
}

Coefficient coeff_F(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return coeff_D(lambda, mu, nu);
}

Coefficient coeff_c_classical(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  return count_D(lambda, mu, superstandard(nu));
}

Coefficient schur_product_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const int vars = std::max(nu.length(), lambda.length() + mu.length());
  if (vars == 0) return 1;
  static std::mutex lock;
  static std::map<std::string, std::map<Partition, Coefficient>> cache;
  const std::string key = lambda.to_string() + mu.to_string() + std::to_string(vars);
  std::map<Partition, Coefficient> expansion;
  {
    std::lock_guard guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) expansion = it->second;
  }
  if (expansion.empty()) {
    expansion = schur_product_expansion(lambda, mu, vars);
    std::lock_guard guard(lock);
    cache[key] = expansion;
  }
  auto it = expansion.find(nu);
  return it == expansion.end() ? 0 : it->second;
}

CoefficientRecord compute_record(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                                 const Partition& nu, const RecordOptions& options) {
  CoefficientRecord rec{kind, lambda, mu, nu, 0, "", {}};
  const bool classical_degree = nu.size() == lambda.size() + mu.size();
  switch (kind) {
    case CoefficientKind::C:
      rec.value = coeff_C(lambda, mu, nu);
      rec.method = "jdt";
      if (options.check) {
        rec.checks.push_back({"swap", coeff_C(mu, lambda, nu) == rec.value});
        if (classical_degree) rec.checks.push_back({"schur", schur_product_coefficient(lambda, mu, nu) == rec.value});
      }
      break;
    case CoefficientKind::D:
    case CoefficientKind::F:
      rec.value = coeff_D(lambda, mu, nu);
      rec.method = "jdt";
      if (options.check) {
        const DirectSumFrame frame = options.frame ? *options.frame : DirectSumFrame::minimal_for(lambda, mu, nu);
        rec.checks.push_back({"buch", coeff_D_buch(lambda, mu, nu) == rec.value});
        rec.checks.push_back({"identity", coeff_D_via_identity(lambda, mu, nu, frame) == rec.value});
        if (classical_degree) rec.checks.push_back({"schur", schur_product_coefficient(lambda, mu, nu) == rec.value});
      }
      break;
    case CoefficientKind::E:
      rec.value = coeff_E(lambda, mu, nu);
      rec.method = "augmented-jdt";
      if (options.check) {
        rec.checks.push_back({"rook", coeff_E_via_C(lambda, mu, nu) == rec.value});
        rec.checks.push_back({"swap", coeff_E(mu, lambda, nu) == rec.value});
      }
      break;
    case CoefficientKind::c:
      rec.value = coeff_c_classical(lambda, mu, nu);
      rec.method = "standard-jdt";
      if (options.check) {
        rec.checks.push_back({"schur", schur_product_coefficient(lambda, mu, nu) == rec.value});
        if (classical_degree) rec.checks.push_back({"jdt-C", coeff_C(lambda, mu, nu) == rec.value});
      }
      break;
  }
  return rec;
}

std::map<Partition, Coefficient> expand_product(const Partition& lambda, const Partition& mu,
                                                const AmbientRectangle& ambient, SheafBasis basis) {
  ambient.require_fit(lambda, "lambda");
  ambient.require_fit(mu, "mu");
  std::map<Partition, Coefficient> out;
  for (const Partition& nu : partitions_in_rectangle(ambient.rows(), ambient.cols())) {
    if (!nu.contains(lambda)) continue;
    const Coefficient v = basis == SheafBasis::kStructure ? coeff_C(lambda, mu, nu) : coeff_E(lambda, mu, nu);
    if (v != 0) out[nu] = v;
  }
  return out;
}

std::map<std::pair<Partition, Partition>, Coefficient> expand_coproduct(const Partition& nu,
                                                                        const DirectSumFrame& frame) {
  frame.total().require_fit(nu, "nu");
  std::map<std::pair<Partition, Partition>, Coefficient> out;
  for (const Partition& lambda : partitions_in_rectangle(frame.first().rows(), frame.first().cols()))
    for (const Partition& mu : partitions_in_rectangle(frame.second().rows(), frame.second().cols())) {
      const Coefficient v = coeff_D(lambda, mu, nu);
      if (v != 0) out[{lambda, mu}] = v;
    }
  return out;
}

void clear_coefficient_memo() { memo().clear(); }

}  // namespace kjdt

#include "kjdt/cli.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kjdt/enumerate.hpp"
#include "kjdt/equivalence.hpp"
#include "kjdt/io.hpp"
#include "kjdt/jdt.hpp"
#include "kjdt/products.hpp"
#include "kjdt/suites.hpp"

namespace kjdt {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  int jobs = 0;
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", common.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
}

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// ---- coeff

struct CoeffArgs {
  Common common;
  std::string kind;
  std::string lambda, mu, nu;
  std::string frame;
  std::string cache;
  bool check = false;
};

void print_record(const CoefficientRecord& rec, bool from_cache, const Common& common, std::ostream& out) {
  if (common.json()) {
    json j = to_json(rec);
    j["cached"] = from_cache;
    out << j.dump() << "\n";
    return;
  }
  out << record_key(rec) << " = " << rec.value << "  (" << rec.method << (from_cache ? ", cached" : "") << ")\n";
  for (const auto& [name, ok] : rec.checks) out << "  " << pad_right(name, 10) << (ok ? "ok" : "DISAGREES") << "\n";
}

int run_coeff(const CoeffArgs& a, std::ostream& out, std::ostream& err) {
  const CoefficientKind kind = parse_kind(a.kind);
  const Partition lambda = parse_partition(a.lambda);
  const Partition mu = parse_partition(a.mu);
  const Partition nu = parse_partition(a.nu);
  RecordOptions options;
  options.check = a.check;
  if (!a.frame.empty()) options.frame = parse_frame(a.frame);

  std::string cache = a.cache;
  if (cache.empty())
    if (auto env = default_cache_path()) cache = *env;

  CoefficientRecord probe;
  probe.kind = kind;
  probe.lambda = lambda;
  probe.mu = mu;
  probe.nu = nu;
  const std::string key = record_key(probe);

  std::optional<CoefficientRecord> cached;
  if (!cache.empty()) {
    const auto table = cache_load(cache);
    if (auto it = table.find(key); it != table.end()) cached = it->second;
  }
  if (cached && !a.check) {
    print_record(*cached, true, a.common, out);
    return kExitOk;
  }

  const CoefficientRecord rec = compute_record(kind, lambda, mu, nu, options);
  print_record(rec, false, a.common, out);
  if (cached && cached->value != rec.value) {
    err << json{{"error", "cache-conflict"}, {"key", key}, {"cached", cached->value}, {"computed", rec.value}}.dump()
        << "\n";
    return kExitDisagreement;
  }
  if (!cache.empty()) cache_append(cache, rec);
  if (!rec.checks_passed()) {
    json failed = json::array();
    for (const auto& [name, ok] : rec.checks)
      if (!ok) failed.push_back(name);
    err << json{{"error", "cross-check"}, {"key", key}, {"value", rec.value}, {"failed", failed}}.dump() << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---- expand

struct ExpandArgs {
  Common common;
  std::string lambda, mu, nu, frame;
  int rows = 0, cols = 0;
  std::string basis = "structure";
};

int run_expand_product(const ExpandArgs& a, std::ostream& out) {
  const Partition lambda = parse_partition(a.lambda);
  const Partition mu = parse_partition(a.mu);
  const AmbientRectangle ambient = AmbientRectangle::of_size(a.rows, a.cols);
  const auto basis = a.basis == "ideal" ? SheafBasis::kIdeal : SheafBasis::kStructure;
  const auto table = expand_product(lambda, mu, ambient, basis);
  if (a.common.json()) {
    json terms = json::array();
    for (const auto& [nu, v] : table) terms.push_back({{"nu", to_json(nu)}, {"value", v}});
    out << json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"basis", a.basis}, {"terms", terms}}.dump() << "\n";
    return kExitOk;
  }
  std::size_t width = 2;
  for (const auto& [nu, v] : table) width = std::max(width, nu.to_string().size());
  out << pad_right("nu", width) << "  " << (basis == SheafBasis::kIdeal ? "E" : "C") << "\n";
  for (const auto& [nu, v] : table) out << pad_right(nu.to_string(), width) << "  " << std::setw(4) << v << "\n";
  return kExitOk;
}

int run_expand_coproduct(const ExpandArgs& a, std::ostream& out) {
  const Partition nu = parse_partition(a.nu);
  const DirectSumFrame frame = parse_frame(a.frame);
  const auto table = expand_coproduct(nu, frame);
  if (a.common.json()) {
    json terms = json::array();
    for (const auto& [pair, v] : table)
      terms.push_back({{"lambda", to_json(pair.first)}, {"mu", to_json(pair.second)}, {"value", v}});
    out << json{{"nu", to_json(nu)}, {"terms", terms}}.dump() << "\n";
    return kExitOk;
  }
  std::size_t wl = 6, wm = 2;
  for (const auto& [pair, v] : table) {
    wl = std::max(wl, pair.first.to_string().size());
    wm = std::max(wm, pair.second.to_string().size());
  }
  out << pad_right("lambda", wl) << "  " << pad_right("mu", wm) << "  D\n";
  for (const auto& [pair, v] : table)
    out << pad_right(pair.first.to_string(), wl) << "  " << pad_right(pair.second.to_string(), wm) << "  "
        << std::setw(4) << v << "\n";
  return kExitOk;
}

// ---- verify

struct VerifyArgs {
  Common common;
  std::string suite;
  std::optional<std::uint64_t> seed;
  int instances = 1000;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteOptions options;
  options.instances = a.instances;
  if (a.seed) {
    options.seed = *a.seed;
  } else {
    options.seed = std::random_device{}();
    if (!a.common.json()) out << "seed " << options.seed << "\n";
  }
  std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
  bool all_passed = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteResult res = run_suite(name, options);
    all_passed = all_passed && res.passed;
    if (a.common.json()) {
      json j = res.to_json();
      j["seed"] = options.seed;
      reports.push_back(j);
      continue;
    }
    out << (res.passed ? "PASS " : "FAIL ") << res.name << "  (" << res.checked << " checks)\n";
    for (const auto& line : res.lines) out << indent(line, "  ");
  }
  if (a.common.json()) out << (reports.size() == 1 ? reports[0] : reports).dump() << "\n";
  return all_passed ? kExitOk : kExitDisagreement;
}

// ---- enumerate

struct EnumerateArgs {
  Common common;
  std::string outer, inner = "[]";
  int alphabet = 0;
  std::string content;
  std::string family = "increasing";
  bool surjective = false;
  bool groups = false;
  bool count = false;
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const Partition outer = parse_partition(a.outer);
  if (a.family == "set-valued") {
    std::vector<int> content;
    std::string text = a.content;
    for (char& ch : text)
      if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream in(text);
    for (int v; in >> v;) content.push_back(v);
    if (!in.eof()) throw ParseError("content must be a list of integers", 1, 1);
    const auto all = enumerate_set_valued(outer, content);
    std::vector<AnyTableau> items(all.begin(), all.end());
    if (a.count) {
      out << (a.common.json() ? json{{"count", items.size()}}.dump() : std::to_string(items.size())) << "\n";
      return kExitOk;
    }
    if (a.common.json()) {
      json arr = json::array();
      for (const auto& t : items) arr.push_back(to_json(t));
      out << arr.dump() << "\n";
    } else {
      for (const auto& t : items) out << format_tableau(t) << "\n\n";
    }
    return kExitOk;
  }
  if (a.alphabet <= 0) throw std::invalid_argument("--alphabet must be positive");
  const SkewShape shape(outer, parse_partition(a.inner));
  const auto alphabet = alphabet_upto(a.alphabet);
  if (a.groups) {
    const auto report = check_count_independence(shape, alphabet);
    if (a.common.json()) {
      json groups = json::array();
      for (const auto& g : report.groups) {
        json targets = json::array();
        for (const auto& [t, n] : g.targets) targets.push_back({{"target", to_json(t)}, {"count", n}});
        groups.push_back({{"shape", to_json(g.shape)}, {"multiplicity", g.multiplicity}, {"uniform", g.uniform},
                          {"targets", targets}});
      }
      out << json{{"total", report.total}, {"uniform", report.uniform()}, {"groups", groups}}.dump() << "\n";
    } else {
      out << report.to_string();
    }
    return report.uniform_within_value_sets() ? kExitOk : kExitDisagreement;
  }
  std::vector<AnyTableau> items;
  if (a.family == "augmented") {
    for (int m = 0; m <= a.alphabet; ++m)
      for (auto& t : enumerate_augmented(shape, alphabet_upto(m))) items.emplace_back(std::move(t));
  } else if (a.family == "increasing") {
    for (auto& t : enumerate_increasing(shape, alphabet, a.surjective)) items.emplace_back(std::move(t));
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }
  if (a.count) {
    out << (a.common.json() ? json{{"count", items.size()}}.dump() : std::to_string(items.size())) << "\n";
    return kExitOk;
  }
  if (a.common.json()) {
    json arr = json::array();
    for (const auto& t : items) arr.push_back(to_json(t));
    out << arr.dump() << "\n";
  } else {
    for (const auto& t : items) out << format_tableau(t) << "\n\n";
  }
  return kExitOk;
}

// ---- counterexample

int run_counterexample(const std::string& lambda_text, const Common& common, std::ostream& out) {
  const auto ce = nonrect_counterexample(parse_partition(lambda_text));
  if (krect(ce.tableau, ce.order1) == krect(ce.tableau, ce.order2)) throw InternalError("counterexample does not diverge");
  if (common.json()) {
    out << json{{"lambda", to_json(ce.lambda)},    {"nu", to_json(ce.nu)},         {"tableau", to_json(ce.tableau)},
                {"order1", to_json(ce.order1)},    {"order2", to_json(ce.order2)}, {"result1", to_json(ce.result1)},
                {"result2", to_json(ce.result2)},  {"method", ce.method}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "lambda " << ce.lambda.to_string() << ", nu " << ce.nu.to_string() << " (" << ce.method << ")\n";
  out << "tableau\n" << indent(format_tableau(ce.tableau), "  ");
  out << "order\n" << indent(format_tableau(ce.order1), "  ") << "gives\n" << indent(format_tableau(ce.result1), "  ");
  out << "order\n" << indent(format_tableau(ce.order2), "  ") << "gives\n" << indent(format_tableau(ce.result2), "  ");
  return kExitOk;
}

// ---- product

struct ProductArgs {
  Common common;
  std::string op = "odot";
  std::string left, right;
  int value = 0;
};

int run_product(const ProductArgs& a, std::ostream& out) {
  const auto left = parse_increasing(a.left);
  IncreasingTableau result = left;
  if (a.op == "insert") {
    if (a.value <= 0) throw std::invalid_argument("--value must be a positive integer");
    result = hecke_insert(left, a.value);
  } else {
    const auto right = parse_increasing(a.right);
    result = a.op == "odot" ? odot(left, right) : diamond(left, right);
  }
  if (a.common.json())
    out << json{{"op", a.op}, {"result", to_json(result)}}.dump() << "\n";
  else
    out << format_tableau(result) << "\n";
  return kExitOk;
}

// ---- rectify

struct RectifyArgs {
  Common common;
  std::string tableau, order;
  bool all_orders = false;
};

int run_rectify(const RectifyArgs& a, std::ostream& out) {
  const auto t = parse_increasing(a.tableau);
  if (a.all_orders) {
    const auto report = check_superstandard_independence(t);
    if (a.common.json()) {
      json results = json::array();
      for (const auto& [order, r] : report.results) results.push_back({{"order", to_json(order)}, {"result", to_json(r)}});
      out << json{{"results", results}, {"any_superstandard", report.any_superstandard},
                  {"consistent", report.consistent}}
                 .dump()
          << "\n";
    } else {
      for (const auto& [order, r] : report.results)
        out << "order\n" << indent(format_tableau(order), "  ") << "gives\n" << indent(format_tableau(r), "  ");
      out << "superstandard " << (report.any_superstandard ? "reached" : "not reached") << ", "
          << (report.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return report.consistent ? kExitOk : kExitDisagreement;
  }
  const auto result = a.order.empty() ? krect(t) : krect(t, parse_increasing(a.order));
  if (a.common.json())
    out << json{{"result", to_json(result)}}.dump() << "\n";
  else
    out << format_tableau(result) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theoretic jeu de taquin and Schubert structure constants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CoeffArgs coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Compute one coefficient");
  coeff_cmd->add_option("kind", coeff.kind, "C, D, E, F or c")->required();
  coeff_cmd->add_option("--lambda", coeff.lambda, "e.g. [2,1]")->required();
  coeff_cmd->add_option("--mu", coeff.mu)->required();
  coeff_cmd->add_option("--nu", coeff.nu)->required();
  coeff_cmd->add_option("--frame", coeff.frame, "k1,n1,k2,n2 for the D = C identity");
  coeff_cmd->add_flag("--check", coeff.check, "Run every cross-check");
  coeff_cmd->add_option("--cache", coeff.cache, std::string("Cache file (default $") + kCacheEnvVar + ")");
  add_common(coeff_cmd, coeff.common);

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Product or coproduct tables");
  expand_cmd->require_subcommand(1);
  auto* product_table = expand_cmd->add_subcommand("product", "C or E coefficients of a product");
  product_table->add_option("--lambda", expand.lambda)->required();
  product_table->add_option("--mu", expand.mu)->required();
  product_table->add_option("--rows", expand.rows, "Ambient rows")->required()->check(CLI::PositiveNumber);
  product_table->add_option("--cols", expand.cols, "Ambient columns")->required()->check(CLI::PositiveNumber);
  product_table->add_option("--basis", expand.basis)->check(CLI::IsMember({"structure", "ideal"}));
  add_common(product_table, expand.common);
  auto* coproduct_table = expand_cmd->add_subcommand("coproduct", "D coefficients of a coproduct");
  coproduct_table->add_option("--nu", expand.nu)->required();
  coproduct_table->add_option("--frame", expand.frame, "k1,n1,k2,n2")->required();
  add_common(coproduct_table, expand.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", verify.suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized suites; printed when generated");
  verify_cmd->add_option("--instances", verify.instances)->check(CLI::PositiveNumber);
  add_common(verify_cmd, verify.common);

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List tableaux of a shape");
  enumerate_cmd->add_option("--outer", enumerate.outer)->required();
  enumerate_cmd->add_option("--inner", enumerate.inner);
  enumerate_cmd->add_option("--alphabet", enumerate.alphabet, "Largest letter");
  enumerate_cmd->add_option("--content", enumerate.content, "Set-valued content, e.g. [2,1]");
  enumerate_cmd->add_option("--family", enumerate.family)
      ->check(CLI::IsMember({"increasing", "augmented", "set-valued"}));
  enumerate_cmd->add_flag("--surjective", enumerate.surjective, "Use every letter");
  enumerate_cmd->add_flag("--groups", enumerate.groups, "Group by rectification target");
  enumerate_cmd->add_flag("--count", enumerate.count, "Only print the count");
  add_common(enumerate_cmd, enumerate.common);

  std::string ce_lambda;
  Common ce_common;
  auto* ce_cmd = app.add_subcommand("counterexample", "Order-dependent rectification for a non-rectangle");
  ce_cmd->add_option("--lambda", ce_lambda)->required();
  add_common(ce_cmd, ce_common);

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "Tableau products");
  product_cmd->add_option("--op", product.op)->check(CLI::IsMember({"odot", "diamond", "insert"}));
  product_cmd->add_option("--left", product.left)->required();
  product_cmd->add_option("--right", product.right);
  product_cmd->add_option("--value", product.value, "Letter for --op insert");
  add_common(product_cmd, product.common);

  RectifyArgs rectify;
  auto* rectify_cmd = app.add_subcommand("rectify", "K-rectify a tableau");
  rectify_cmd->add_option("--tableau", rectify.tableau)->required();
  rectify_cmd->add_option("--order", rectify.order, "Rectification order, superstandard by default");
  rectify_cmd->add_flag("--all-orders", rectify.all_orders, "Try every order");
  add_common(rectify_cmd, rectify.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto jobs_of = [&]() -> int {
    for (const Common* c : {&coeff.common, &expand.common, &verify.common, &enumerate.common, &ce_common,
                            &product.common, &rectify.common})
      if (c->jobs) return c->jobs;
    return 0;
  };
  set_worker_count(jobs_of());

  try {
    if (*coeff_cmd) return run_coeff(coeff, out, err);
    if (*product_table) return run_expand_product(expand, out);
    if (*coproduct_table) return run_expand_coproduct(expand, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*enumerate_cmd) return run_enumerate(enumerate, out);
    if (*ce_cmd) return run_counterexample(ce_lambda, ce_common, out);
    if (*product_cmd) {
      if (product.op != "insert" && product.right.empty()) throw std::invalid_argument("--right is required");
      return run_product(product, out);
    }
    if (*rectify_cmd) return run_rectify(rectify, out);
  } catch (const ParseError& e) {
    err << json{{"error", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}}.dump() << "\n";
    return kExitUsage;
  } catch (const CacheConflict& e) {
    err << json{{"error", "cache-conflict"}, {"message", e.what()}}.dump() << "\n";
    return kExitDisagreement;
  } catch (const InternalError& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitInternal;
  } catch (const SlideError& e) {
    err << json{{"error", "invalid-slide"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace kjdt

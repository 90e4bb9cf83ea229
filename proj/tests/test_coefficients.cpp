#include <gtest/gtest.h>

#include "kjdt/coefficients.hpp"
#include "kjdt/enumerate.hpp"
#include "kjdt/jdt.hpp"

using namespace kjdt;

namespace {

std::vector<Partition> upto(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

Coefficient binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Coefficient r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// K-theoretic Pieri rule for multiplying by a single row (p): sum over
// horizontal strips nu/lambda with r nonempty rows of
// (-1)^{|nu/lambda| - p} binom(r - 1, |nu/lambda| - p).
Coefficient pieri_row(const Partition& lambda, int p, const Partition& nu) {
  if (!nu.contains(lambda)) return 0;
  int rows = 0;
  for (int r = 1; r <= nu.length(); ++r) {
    if (nu.row(r) > lambda.row(r)) ++rows;
    if (r > 1 && nu.row(r) > lambda.row(r - 1)) return 0;  // two boxes in a column
  }
  const int extra = nu.size() - lambda.size() - p;
  if (extra < 0 || rows == 0) return 0;
  return (extra % 2 ? -1 : 1) * binomial(rows - 1, extra);
}

// Classical Pieri for one box.
Coefficient one_box(const Partition& lambda, const Partition& nu) {
  return nu.size() == lambda.size() + 1 && nu.contains(lambda) ? 1 : 0;
}

int parity(int n) { return n % 2 ? -1 : 1; }

}  // namespace

TEST(CoeffC, SmallValues) {
  const Partition one({1});
  EXPECT_EQ(coeff_C(one, one, Partition({2})), 1);
  EXPECT_EQ(coeff_C(one, one, Partition({1, 1})), 1);
  EXPECT_EQ(coeff_C(one, one, Partition({2, 1})), -1);
  EXPECT_EQ(coeff_C(one, one, Partition({2, 2})), 0);
  EXPECT_EQ(coeff_C(Partition(), one, one), 1);
  EXPECT_EQ(coeff_C(one, one, one), 0);
}

TEST(CoeffC, MatchesPieriRule) {
  for (int p = 1; p <= 3; ++p)
    for (const auto& lambda : upto(4))
      for (const auto& nu : upto(7)) {
        if (!nu.contains(lambda) || nu.size() < lambda.size() + p) continue;
        EXPECT_EQ(coeff_C(lambda, Partition({p}), nu), pieri_row(lambda, p, nu))
            << lambda.to_string() << " x (" << p << ") -> " << nu.to_string();
      }
}

TEST(CoeffC, IsCommutative) {
  for (const auto& nu : upto(6))
    for (const auto& lambda : upto(3))
      for (const auto& mu : upto(3))
        EXPECT_EQ(coeff_C(lambda, mu, nu), coeff_C(mu, lambda, nu))
            << lambda.to_string() << mu.to_string() << nu.to_string();
}

TEST(CoeffD, StarShapeValue) {
  EXPECT_EQ(coeff_D(Partition({2}), Partition({2, 1}), Partition({3, 1})), -2);
  EXPECT_EQ(coeff_D(Partition({1}), Partition({1}), Partition({1})), -1);
  EXPECT_EQ(coeff_D_buch(Partition({1}), Partition({1}), Partition({1})), -1);
  EXPECT_EQ(coeff_D(Partition({1}), Partition({1}), Partition({2})), 1);
}

TEST(CoeffD, IndependentOfTarget) {
  for (const auto& nu : upto(5)) {
    if (nu.empty()) continue;
    for (const auto& lambda : upto(3))
      for (const auto& mu : upto(3)) {
        if (lambda.size() + mu.size() < nu.size()) continue;
        const Coefficient base = coeff_D(lambda, mu, nu);
        for (const auto& target :
             enumerate_increasing(SkewShape(nu, Partition()), alphabet_upto(lambda.size() + mu.size()), false))
          EXPECT_EQ(coeff_D(lambda, mu, nu, target), base)
              << lambda.to_string() << mu.to_string() << nu.to_string();
      }
  }
}

TEST(CoeffD, AgreesWithSetValuedRuleAndIdentity) {
  for (const auto& nu : upto(4))
    for (const auto& lambda : upto(3))
      for (const auto& mu : upto(3)) {
        const auto d = coeff_D(lambda, mu, nu);
        EXPECT_EQ(d, coeff_D_buch(lambda, mu, nu)) << lambda.to_string() << mu.to_string() << nu.to_string();
        EXPECT_EQ(d, coeff_D(mu, lambda, nu));
        EXPECT_EQ(d, coeff_F(lambda, mu, nu));
        const auto frame = DirectSumFrame::minimal_for(lambda, mu, nu);
        EXPECT_EQ(d, coeff_D_via_identity(lambda, mu, nu, frame));
      }
}

TEST(CoeffE, IdealSheafValues) {
  const Partition one({1});
  EXPECT_EQ(coeff_E(one, one, Partition({2, 1})), -3);
  EXPECT_EQ(coeff_E_via_C(one, one, Partition({2, 1})), -3);
  EXPECT_EQ(coeff_E(one, one, Partition({2, 2})), 1);
  EXPECT_EQ(coeff_E(one, one, Partition({2})), 1);
}

TEST(CoeffE, RookStripFormulaAndSymmetry) {
  for (const auto& nu : upto(5))
    for (const auto& lambda : upto(3))
      for (const auto& mu : upto(3)) {
        const auto e = coeff_E(lambda, mu, nu);
        EXPECT_EQ(e, coeff_E_via_C(lambda, mu, nu)) << lambda.to_string() << mu.to_string() << nu.to_string();
        EXPECT_EQ(e, coeff_E(mu, lambda, nu));
      }
}

TEST(Classical, DegreeMatchesSchurAndPieri) {
  for (const auto& lambda : upto(5))
    for (const auto& nu : partitions_of(lambda.size() + 1)) {
      const Partition one({1});
      EXPECT_EQ(coeff_c_classical(lambda, one, nu), one_box(lambda, nu));
      EXPECT_EQ(schur_product_coefficient(lambda, one, nu), one_box(lambda, nu));
    }
  EXPECT_EQ(coeff_c_classical(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
  EXPECT_EQ(schur_product_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
  EXPECT_EQ(coeff_c_classical(Partition({1}), Partition({1}), Partition({2, 1})), 0);
}

TEST(Signs, AlternateWithDegree) {
  for (const auto& nu : upto(5))
    for (const auto& lambda : upto(3))
      for (const auto& mu : upto(3)) {
        const int excess = nu.size() - lambda.size() - mu.size();
        const int sign = parity(excess < 0 ? -excess : excess);
        for (auto v : {coeff_C(lambda, mu, nu), coeff_D(lambda, mu, nu), coeff_E(lambda, mu, nu)})
          EXPECT_TRUE(v == 0 || (v > 0) == (sign > 0)) << lambda.to_string() << mu.to_string() << nu.to_string();
      }
}

TEST(Records, ChecksAndKinds) {
  RecordOptions opts;
  opts.check = true;
  const auto d = compute_record(CoefficientKind::D, Partition({2}), Partition({2, 1}), Partition({3, 1}), opts);
  EXPECT_EQ(d.value, -2);
  EXPECT_TRUE(d.checks_passed());
  EXPECT_TRUE(d.sign_ok());
  std::vector<std::string> names;
  for (const auto& [n, ok] : d.checks) names.push_back(n);
  EXPECT_NE(std::find(names.begin(), names.end(), "buch"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "identity"), names.end());

  const auto e = compute_record(CoefficientKind::E, Partition({1}), Partition({1}), Partition({2, 1}), opts);
  EXPECT_EQ(e.value, -3);
  EXPECT_TRUE(e.checks_passed());
  EXPECT_EQ(e.method, "augmented-jdt");

  EXPECT_EQ(parse_kind("c"), CoefficientKind::c);
  EXPECT_EQ(kind_name(CoefficientKind::F), "F");
  EXPECT_THROW(parse_kind("Q"), std::invalid_argument);
}

TEST(Expansion, IdealSheafSquareInTwoByTwo) {
  const auto table = expand_product(Partition({1}), Partition({1}), AmbientRectangle(2, 4), SheafBasis::kIdeal);
  const std::map<Partition, Coefficient> want = {
      {Partition({1, 1}), 1}, {Partition({2}), 1}, {Partition({2, 1}), -3}, {Partition({2, 2}), 1}};
  EXPECT_EQ(table, want);
  const auto structure =
      expand_product(Partition({1}), Partition({1}), AmbientRectangle(2, 4), SheafBasis::kStructure);
  const std::map<Partition, Coefficient> want_c = {{Partition({1, 1}), 1}, {Partition({2}), 1}, {Partition({2, 1}), -1}};
  EXPECT_EQ(structure, want_c);
}

TEST(Expansion, CoproductMatchesPointwise) {
  const DirectSumFrame frame(1, 3, 1, 3);
  const Partition nu({2, 1});
  const auto table = expand_coproduct(nu, frame);
  for (const auto& l : partitions_in_rectangle(1, 2))
    for (const auto& m : partitions_in_rectangle(1, 2)) {
      const auto it = table.find({l, m});
      const Coefficient got = it == table.end() ? 0 : it->second;
      EXPECT_EQ(got, coeff_D(l, m, nu));
    }
}

TEST(Threads, WorkerCountDoesNotChangeResults) {
  const Partition lambda({2, 1}), mu({2, 1}), nu({3, 2, 1});
  set_worker_count(1);
  clear_coefficient_memo();
  const auto one = rectification_histogram(star(lambda, mu), alphabet_upto(6), false);
  set_worker_count(4);
  clear_coefficient_memo();
  const auto four = rectification_histogram(star(lambda, mu), alphabet_upto(6), false);
  EXPECT_EQ(one, four);
  EXPECT_EQ(coeff_C(lambda, mu, nu), 2);
  set_worker_count(0);
}

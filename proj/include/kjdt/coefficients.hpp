#pragma once

// Coefficient rules. C, D, E come from counting increasing (or X-augmented)
// tableaux that K-rectify to a fixed target; every rule has at least one
// independent route used as a cross-check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kjdt/jdt.hpp"

namespace kjdt {

using Coefficient = std::int64_t;

enum class CoefficientKind { C, D, E, F, c };

std::string kind_name(CoefficientKind kind);
/// Accepts "C", "D", "E", "F", "c". Throws std::invalid_argument otherwise.
CoefficientKind parse_kind(const std::string& text);

struct CoefficientRecord {
  CoefficientKind kind = CoefficientKind::C;
  Partition lambda;
  Partition mu;
  Partition nu;
  Coefficient value = 0;
  std::string method;
  std::vector<std::pair<std::string, bool>> checks;

  bool checks_passed() const;
  /// Zero, or sign (-1)^{| |nu| - |lambda| - |mu| |}.
  bool sign_ok() const;

  bool operator==(const CoefficientRecord&) const = default;
};

/// How many threads the enumerations may use. Zero means hardware concurrency.
void set_worker_count(int workers);
int worker_count();

/// Multiplicity of each K-rectification of the tableaux in INC(shape) over
/// `alphabet` (surjective fillings only when requested).
using RectificationHistogram = std::map<IncreasingTableau, Coefficient>;
RectificationHistogram rectification_histogram(const SkewShape& shape, const std::vector<int>& alphabet,
                                               bool surjective);
RectificationHistogram rectification_histogram(const SkewShape& shape, const std::vector<int>& alphabet,
                                               bool surjective, const IncreasingTableau& order);

Coefficient coeff_C(const Partition& lambda, const Partition& mu, const Partition& nu);
Coefficient coeff_D(const Partition& lambda, const Partition& mu, const Partition& nu,
                    const std::optional<IncreasingTableau>& target = std::nullopt);
Coefficient coeff_D_buch(const Partition& lambda, const Partition& mu, const Partition& nu);
Coefficient coeff_D_via_identity(const Partition& lambda, const Partition& mu, const Partition& nu,
                                 const DirectSumFrame& frame);
Coefficient coeff_E(const Partition& lambda, const Partition& mu, const Partition& nu);
Coefficient coeff_E_via_C(const Partition& lambda, const Partition& mu, const Partition& nu);
Coefficient coeff_F(const Partition& lambda, const Partition& mu, const Partition& nu);
/// Number of standard contributors to the D rule when |nu| = |lambda| + |mu|.
Coefficient coeff_c_classical(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Littlewood-Richardson coefficient read off the product s_lambda * s_mu
/// expanded into monomials in max(l(nu), l(lambda) + l(mu)) variables.
Coefficient schur_product_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

struct RecordOptions {
  bool check = false;
  /// Frame for the D = C identity; the smallest fitting frame if absent.
  std::optional<DirectSumFrame> frame;
};

CoefficientRecord compute_record(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                                 const Partition& nu, const RecordOptions& options = {});

enum class SheafBasis { kStructure, kIdeal };

/// Nonzero C (structure sheaves) or E (ideal sheaves) coefficients over nu in `ambient`.
std::map<Partition, Coefficient> expand_product(const Partition& lambda, const Partition& mu,
                                                const AmbientRectangle& ambient, SheafBasis basis);

/// Nonzero D coefficients over (lambda, mu) in the frame's two rectangles.
std::map<std::pair<Partition, Partition>, Coefficient> expand_coproduct(const Partition& nu,
                                                                        const DirectSumFrame& frame);

/// Drops every memoized histogram.
void clear_coefficient_memo();

}  // namespace kjdt

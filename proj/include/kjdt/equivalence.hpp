#pragma once

// Checks of the structural statements about K-jeu de taquin: strong dual
// equivalence of rectangles, box-of-origin invariants, order independence of
// rectification and counterexamples for non-rectangular shapes.

#include <optional>
#include <string>
#include <vector>

#include "kjdt/coefficients.hpp"

namespace kjdt {

struct DualEquivalenceVerdict {
  bool equivalent = true;
  /// Index (in the sequence of effective switch states) of the first
  /// configuration mismatch, or -1.
  int divergent_stage = -1;
  std::string detail;
};

/// Compares the configurations of the two switch traces state by state.
/// Throws SlideError only if a step is invalid for both tableaux.
DualEquivalenceVerdict check_strong_dual_equivalence(const IncreasingTableau& a, const IncreasingTableau& b,
                                                     const std::vector<SlideStep>& slides,
                                                     const AmbientRectangle& ambient);

struct SlideSequenceOptions {
  bool forward = true;
  bool reverse = true;
  /// Only one corner per slide; otherwise every nonempty corner subset.
  bool single_corner = true;
};

/// Every slide sequence of length <= max_length starting from `shape`,
/// including the empty one. Shapes evolve as for an arbitrary filling of
/// `shape`, so `reference` supplies the evolution.
std::vector<std::vector<SlideStep>> slide_sequences(const IncreasingTableau& reference,
                                                    const AmbientRectangle& ambient, int max_length,
                                                    const SlideSequenceOptions& options = {});

struct OriginViolation {
  int stage = 0;
  std::string invariant;  // "uniform", "row-order", "column-order", "bullet-neighbors"
  std::string detail;
};

struct OriginReport {
  std::vector<OriginViolation> violations;
  bool clean() const { return violations.empty(); }
};

OriginReport verify_origin_invariants(const SwitchTrace& trace);

struct Counterexample {
  Partition lambda;
  Partition nu;
  IncreasingTableau tableau;
  IncreasingTableau order1;
  IncreasingTableau order2;
  IncreasingTableau result1;
  IncreasingTableau result2;
  std::string method;  // "seed", "conjugate-seed" or "search"
};

/// Throws ShapeError when lambda is a rectangle (or empty).
Counterexample nonrect_counterexample(const Partition& lambda);

IncreasingTableau transpose(const IncreasingTableau& t);

/// Every increasing tableau of shape `inner` with entries in 1..max_label.
std::vector<IncreasingTableau> rectification_orders(const Partition& inner, int max_label);

struct CountGroup {
  Partition shape;
  /// Every tableau of this shape over the alphabet with its multiplicity,
  /// zero counts included.
  std::vector<std::pair<IncreasingTableau, Coefficient>> targets;
  Coefficient multiplicity = 0;
  /// Same multiplicity for every target with the same value set.
  bool uniform_within_value_sets = true;
  /// Same multiplicity for every target of the shape.
  bool uniform = true;
};

struct CountIndependenceReport {
  std::vector<CountGroup> groups;  // only shapes that occur as a rectification
  Coefficient total = 0;
  bool uniform() const;
  bool uniform_within_value_sets() const;
  std::string to_string() const;
};

CountIndependenceReport check_count_independence(const SkewShape& shape, const std::vector<int>& alphabet);

struct SuperstandardReport {
  std::vector<std::pair<IncreasingTableau, IncreasingTableau>> results;  // (order, krect)
  bool any_superstandard = false;
  bool consistent = true;  // no superstandard result, or every order agrees on it
};

/// Orders default to every increasing tableau of the inner shape with
/// entries at most |inner| + 1.
SuperstandardReport check_superstandard_independence(const IncreasingTableau& t, int max_label = 0);

}  // namespace kjdt

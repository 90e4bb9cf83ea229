#pragma once

// K-theoretic jeu de taquin on increasing tableaux.
//
// A slide places bullets in a set of corners and then, for each label in turn
// (increasing for forward slides, decreasing for reverse slides), switches
// every alternating ribbon made of bullets and that label. Single-box ribbons
// are left alone. Forward slides start in inner corners and drop the bullets
// that end up on the outer rim; reverse slides start in outer corners inside
// an ambient rectangle and absorb the final bullets into the inner shape.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kjdt/tableau.hpp"

namespace kjdt {

enum class SlideDirection { kForward, kReverse };

struct SlideStep {
  SlideDirection direction = SlideDirection::kForward;
  std::vector<Box> corners;

  auto operator<=>(const SlideStep&) const = default;
};

/// A slide was requested into boxes that are not corners of the current
/// shape. `step()` is the index within a slide sequence, or -1.
class SlideError : public std::invalid_argument {
 public:
  explicit SlideError(const std::string& what, int step = -1) : std::invalid_argument(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

struct SlideOutcome {
  IncreasingTableau tableau;
  /// Where the bullets finished (removed from the outer shape for forward
  /// slides, added to the inner shape for reverse slides).
  std::vector<Box> vacated;
};

IncreasingTableau kjdt_slide(const IncreasingTableau& t, const std::vector<Box>& corners);
SlideOutcome kjdt_slide_tracked(const IncreasingTableau& t, const std::vector<Box>& corners);

/// `corners` must be outer corners of t's shape inside `ambient`.
IncreasingTableau rev_kjdt_slide(const IncreasingTableau& t, const std::vector<Box>& corners,
                                 const AmbientRectangle& ambient);
SlideOutcome rev_kjdt_slide_tracked(const IncreasingTableau& t, const std::vector<Box>& corners,
                                    const AmbientRectangle& ambient);

struct Infusion {
  IncreasingTableau first;   // the slid outer tableau
  IncreasingTableau second;  // records which inner label vacated each box
};

/// K-infusion of a nested pair (inner.outer == outer.inner). The inner
/// tableau's labels are consumed largest first: their boxes are slid into and
/// the vacated boxes collect that label.
Infusion kinfusion(const IncreasingTableau& inner, const IncreasingTableau& outer);

/// K-rectification of `t` with the rectification order `order`, an
/// increasing tableau of straight shape t.shape().inner().
IncreasingTableau krect(const IncreasingTableau& t, const IncreasingTableau& order);
/// Rectification with the superstandard order on the inner shape.
IncreasingTableau krect(const IncreasingTableau& t);

/// Which boxes hold numbers and which hold bullets.
struct Configuration {
  std::vector<Box> numeric;
  std::vector<Box> bullets;

  auto operator<=>(const Configuration&) const = default;
};

struct SwitchState {
  std::vector<std::pair<Box, int>> numbers;  // sorted by box
  std::vector<Box> bullets;                  // sorted
  int slide = 0;  // index into the slide sequence
  int label = 0;  // label just switched; 0 for the bullet placement state

  Configuration configuration() const;
};

/// The slow-motion record of a slide sequence: one state when bullets are
/// placed and one after every switch that moves something.
struct SwitchTrace {
  using OriginMap = std::map<Box, Box>;

  std::vector<SwitchState> states;
  /// Box of origin in the starting tableau for each numeric box; nullopt
  /// from the first non-uniform switch on.
  std::vector<std::optional<OriginMap>> origins;
  /// Whether the switch producing each state kept ribbons origin-uniform.
  std::vector<bool> uniform;
  IncreasingTableau result;
};

SwitchTrace switch_trace(const IncreasingTableau& t, const std::vector<SlideStep>& steps,
                         const AmbientRectangle& ambient);

/// One text grid per state: `*` bullets, `.` empty cells, with a header line
/// naming the slide, the label and the uniformity flag.
std::string format_trace(const SwitchTrace& trace);

/// Corners used at each step of a reverse rectification.
enum class CornerChoice { kFirst, kLast, kAll };

struct PlacedTableau {
  IncreasingTableau tableau;
  Box anchor;  // northwest box of the occupied region
};

/// Reverse slides until the outer shape fills `ambient`. Expects a straight
/// rectangular tableau that fits.
PlacedTableau rev_krect_in_ambient(const IncreasingTableau& t, const AmbientRectangle& ambient,
                                   CornerChoice choice = CornerChoice::kFirst);

}  // namespace kjdt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/curve.hpp"

namespace liaison {

/// One move of a chain. `before` and `after` are full records; `after` is
/// always recomputed from its class (or from the linkage formulas when the
/// curve has no witness), never copied.
struct ChainStep {
  enum class Kind {
    biliaison,  // C + hH on the witness surface
    g_link,     // residual in the AG divisor mH - K
    ci_link,    // complete intersection (f1, f2) in P3
    rewitness,  // same curve, read as a class on another surface
  };

  Kind kind = Kind::biliaison;
  std::int64_t h = 0;  // biliaison height, or m for g_link
  std::int64_t f1 = 0, f2 = 0;
  CurveRecord before;
  CurveRecord after;
  std::string note;

  bool is_liaison_move() const { return kind != Kind::rewitness; }
};

std::string to_string(ChainStep::Kind k);

/// An auditable sequence of moves starting at `start`.
struct Chain {
  CurveRecord start;
  std::vector<ChainStep> steps;

  const CurveRecord& end() const { return steps.empty() ? start : steps.back().after; }
  /// Steps that are actual linkages or biliaisons (re-witnessing excluded).
  std::size_t liaison_steps() const;
  /// Every biliaison has h >= 0 and there are no links.
  bool ascending_only() const;
  /// Sum of biliaison heights.
  std::int64_t total_height() const;
  /// Consecutive records agree (degree, genus, Rao tag, and class/surface when
  /// both are witnessed), and every step re-derives its `after` record.
  /// Throws Error describing the first broken link.
  void validate() const;
};

/// C + hH on the witness surface: d' = d + h*deg S,
/// g' = g + h*d + h*(h*deg S + H.K)/2, Rao module shifted by h. The new
/// class is flagged (screen_failed) if it fails the effectivity screen.
CurveRecord elementary_biliaison(const CurveRecord& c, std::int64_t h);

/// The closed-form (d', g') of a height-h biliaison, independent of classes.
std::pair<std::int64_t, std::int64_t> biliaison_invariants(std::int64_t d, std::int64_t g,
                                                           std::int64_t h,
                                                           const SurfaceModel& s);

/// Residual of C in the AG divisor D = mH - K on the witness surface.
/// deg C + deg C' = deg D; the Rao tag is linked with t = m (omega_D = O_D(mH)).
CurveRecord g_link_on_surface(const CurveRecord& c, std::int64_t m);

/// The linking divisor mH - K used by g_link_on_surface.
DivisorClass ag_divisor(const SurfaceModel& s, std::int64_t m);

/// Link in a complete intersection of surfaces of degrees f1, f2 in P3:
/// d' = f1*f2 - d, g' = g + (f1 + f2 - 4)(d' - d)/2. Throws if d' < 0.
CurveRecord ci_link_p3(const CurveRecord& c, std::int64_t f1, std::int64_t f2);

/// Dimension of the family of curves in |C| as S moves in its family:
/// surface_family_dim(S) + expected_dim_linear_system(C, S).
std::int64_t family_dimension(const SurfaceModel& s, const DivisorClass& c);

/// 5d + 1 - g: every component of the Hilbert scheme of curves in P4 with
/// these invariants has at least this dimension.
std::int64_t hilbert_dim_lower_bound(std::int64_t d, std::int64_t g);

}  // namespace liaison

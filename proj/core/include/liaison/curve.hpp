#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liaison/lattice.hpp"
#include "liaison/surface.hpp"

namespace liaison {

/// Symbolic Rao module M(C) = H^1_*(I_C): which module, where it starts, and
/// whether it has been dualized. Nothing here computes cohomology.
struct RaoTag {
  enum class Kind { zero, simple_k, M_a, unknown };

  Kind kind = Kind::unknown;
  std::int64_t a = 0;      // only for M_a = R/(x0,..,x3,x4^a)
  std::int64_t shift = 0;  // degree where the module starts
  bool dualized = false;

  static RaoTag zero() { return {Kind::zero, 0, 0, false}; }
  static RaoTag simple_k(std::int64_t shift = 0) { return {Kind::simple_k, 0, shift, false}; }
  static RaoTag M(std::int64_t a, std::int64_t shift = 0);
  static RaoTag unknown() { return {Kind::unknown, 0, 0, false}; }

  /// Number of nonzero degrees (k: 1, M_a: a); 1 for unknown, 0 for zero.
  std::int64_t length() const;
  /// Last nonzero degree.
  std::int64_t end() const { return shift + length() - 1; }

  std::string kind_name() const;
  std::string to_string() const;

  friend bool operator==(const RaoTag&, const RaoTag&) = default;
  friend auto operator<=>(const RaoTag&, const RaoTag&) = default;
};

/// Elementary biliaison of height h moves the module up by h.
RaoTag rao_after_biliaison(const RaoTag& tag, std::int64_t h);

/// A single link whose linking scheme D has dualizing sheaf O_D(t):
/// M(C')_n = M(C)^*_{t-n}, so the new start is t - end and duality flips.
RaoTag rao_after_link(const RaoTag& tag, std::int64_t t);

struct Witness {
  std::shared_ptr<const SurfaceModel> surface;
  DivisorClass cls;
};

/// A curve known by degree and arithmetic genus, optionally witnessed as a
/// divisor class on a catalog surface. With a witness, (d, g) are always
/// recomputed from the class.
class CurveRecord {
public:
  static CurveRecord abstract(std::int64_t degree, std::int64_t genus, RaoTag rao,
                              std::string provenance);
  static CurveRecord on_surface(std::shared_ptr<const SurfaceModel> surface, DivisorClass cls,
                                RaoTag rao, std::string provenance);

  std::int64_t degree() const { return degree_; }
  std::int64_t genus() const { return genus_; }
  const std::optional<Witness>& witness() const { return witness_; }
  const RaoTag& rao() const { return rao_; }
  const std::string& provenance() const { return provenance_; }
  /// Set when the witness class fails the heuristic effectivity screen.
  bool screen_failed() const { return screen_failed_; }

  /// Throws MissingWitness when there is none.
  const Witness& require_witness() const;

  CurveRecord with_rao(RaoTag rao) const;
  CurveRecord with_provenance(std::string p) const;

  std::string summary() const;

private:
  std::int64_t degree_ = 0;
  std::int64_t genus_ = 0;
  std::optional<Witness> witness_;
  RaoTag rao_;
  std::string provenance_;
  bool screen_failed_ = false;
};

/// Necessary condition for an irreducible curve in |C| on S: C.H >= 1 and
/// C.L >= 0 for every enumerated line L other than C itself.
bool passes_effectivity_screen(const SurfaceModel& s, const DivisorClass& c);

struct SecantEntry {
  LineClass line;
  std::int64_t value = 0;
};

/// Intersection numbers of a curve with every line class of its surface.
struct SecantProfile {
  std::vector<SecantEntry> entries;
  std::map<std::int64_t, std::size_t> summary;  // value -> multiplicity

  /// "(1^8,3^8)"; exponent 1 is written bare, e.g. "(0,1^4,2^6,3^4,4)".
  std::string summary_string() const;
};

SecantProfile multisecant_profile(const CurveRecord& c);

/// Line classes meeting C in exactly k points (exact reading of "k-secant").
std::vector<LineClass> k_secant_lines(const CurveRecord& c, std::int64_t k);

/// deg C - C.G for a conic class G of the witness surface: the degree of the
/// pencil cut by hyperplanes through the plane of G, an upper bound on gonality.
std::int64_t plane_pencil_bound(const CurveRecord& c, const DivisorClass& conic);

/// Disjoint union: degrees add, genus g1 + g2 - 1.
CurveRecord disjoint_union(const CurveRecord& c1, const CurveRecord& c2,
                           RaoTag rao = RaoTag::unknown());

/// Disjoint union of two curves witnessed on the same surface; requires
/// C1.C2 = 0 and returns the witnessed sum.
CurveRecord disjoint_union_on_surface(const CurveRecord& c1, const CurveRecord& c2,
                                      RaoTag rao = RaoTag::unknown());

CurveRecord line_curve();
/// Plane curve of degree d: genus (d-1)(d-2)/2, Rao module zero.
CurveRecord plane_curve(std::int64_t d);

/// Minimal curve with M = k in degree 0: a line disjoint from a plane curve of
/// degree d - 1. Requires d >= 2.
CurveRecord minimal_curve_M_k(std::int64_t d);

enum class LesperanceType { a, b, c, d };

LesperanceType lesperance_type_from_string(const std::string& s);

/// Reduced minimal curves for M_a:
///   a) line + plane curve of degree a;
///   b) plane curves of degrees a <= b;
///   c) plane curves of degrees a, b with b >= 1;
///   d) line + ACM space curve of degree b and genus acm_genus, where a is the
///      least degree of a surface in P3 containing the ACM curve but not P.
/// Every type needs a >= 2 and total degree >= a + 1.
CurveRecord lesperance_curve(LesperanceType type, std::int64_t a, std::int64_t b = 0,
                             std::optional<std::int64_t> acm_genus = std::nullopt);

/// Hilbert function phi(n), 0 <= n <= n_max, of a witnessed curve on an ACM
/// surface, assuming C is ACM: phi(n) = h0(nH) - h0(nH - C) with h0 modeled by
/// Riemann-Roch (0 for classes of negative or zero degree other than 0).
std::vector<std::int64_t> modeled_hilbert_function(const CurveRecord& c, std::int64_t n_max);

}  // namespace liaison

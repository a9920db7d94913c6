#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/lattice.hpp"

namespace liaison {

enum class Ambient { P2, P3, P4 };

std::string to_string(Ambient a);
Ambient ambient_from_string(std::string_view s);

/// Lines come either rigid (L^2 = -1) or in a one-parameter family (L^2 = 0).
enum class FamilyFlag { finite, one_parameter };

std::string to_string(FamilyFlag f);

struct LineClass {
  DivisorClass cls;
  FamilyFlag family = FamilyFlag::finite;

  friend bool operator==(const LineClass&, const LineClass&) = default;
};

/// Every class L on a surface with L.H = 1, p_a(L) = 0 and L^2 in {-1, 0}.
struct LineClassSet {
  std::vector<LineClass> classes;  // sorted by class

  std::size_t size() const { return classes.size(); }
  bool contains(const DivisorClass& c) const;
};

/// A class that is only a line (or conic) when the blown-up points are in
/// special position; effectivity is recorded as metadata, never computed.
struct SpecialClass {
  DivisorClass cls;
  std::string note;
};

/// A rational (or quadric) surface with its Picard lattice data.
///
/// Instances are built once by the catalog loader, validated, and immutable
/// afterwards; line and conic enumerations are computed at construction.
class SurfaceModel {
public:
  struct Spec {
    std::string id;
    Ambient ambient = Ambient::P4;
    BasisTag basis;
    DivisorClass hyperplane;
    DivisorClass canonical;
    std::int64_t degree = 0;
    std::int64_t sectional_genus = 0;
    std::optional<std::int64_t> family_dim;
    std::vector<std::string> special_position_notes;
    std::vector<SpecialClass> special_classes;
  };

  /// Validates every invariant (rank, canonical class, H^2, sectional genus,
  /// H^2 > 0) and throws CatalogError on the first violation.
  explicit SurfaceModel(Spec spec);

  const std::string& id() const { return spec_.id; }
  Ambient ambient() const { return spec_.ambient; }
  const BasisTag& basis() const { return spec_.basis; }
  const DivisorClass& hyperplane() const { return spec_.hyperplane; }
  const DivisorClass& canonical() const { return spec_.canonical; }
  std::int64_t degree() const { return spec_.degree; }
  std::int64_t sectional_genus() const { return spec_.sectional_genus; }
  /// Stored family dimension, if the catalog entry sets one explicitly.
  const std::optional<std::int64_t>& stored_family_dim() const { return spec_.family_dim; }
  const std::vector<std::string>& special_position_notes() const {
    return spec_.special_position_notes;
  }
  const std::vector<SpecialClass>& special_classes() const { return spec_.special_classes; }
  const Spec& spec() const { return spec_; }

  /// H . K, used by the biliaison update.
  std::int64_t hyperplane_dot_canonical() const { return hk_; }

  const LineClassSet& lines() const { return lines_; }
  const std::vector<DivisorClass>& conics() const { return conics_; }

  /// True when `c` lives in this surface's lattice.
  bool owns(const DivisorClass& c) const { return c.basis() == spec_.basis; }
  void require_owns(const DivisorClass& c) const;

private:
  Spec spec_;
  std::int64_t hk_ = 0;
  LineClassSet lines_;
  std::vector<DivisorClass> conics_;
};

/// All classes C with C.H = deg, C^2 = self and C.K = canon_deg.
///
/// The search is exhaustive. For the blown-up plane with H = (h0; h') and
/// H^2 = D > 0, Cauchy-Schwarz on the negative-definite part gives
///   (a*h0 - deg)^2 <= (a^2 - self) * |h'|^2,
/// so a lies in [(h0*deg - |h'|r)/D, (h0*deg + |h'|r)/D] with r = sqrt(deg^2 - D*self)
/// (empty when deg^2 < D*self, the Hodge index bound), and then |bi| <= sqrt(a^2 - self).
/// Result is sorted.
std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, std::int64_t deg,
                                            std::int64_t self, std::int64_t canon_deg);

/// Closed integer interval for the coefficient `a` used by enumerate_classes;
/// nullopt when the Hodge index bound leaves nothing to search.
std::optional<std::pair<std::int64_t, std::int64_t>> class_search_a_range(const SurfaceModel& s,
                                                                          std::int64_t deg,
                                                                          std::int64_t self);

LineClassSet lines_on(const SurfaceModel& s);

/// Classes G with G.H = 2, p_a(G) = 0 and 0 <= G^2 <= 4/H^2 (Hodge index).
std::vector<DivisorClass> conic_classes(const SurfaceModel& s);

/// Family dimension of the surface in P4: the stored value, or 2n - 8 + 24 for
/// a blown-up plane. Throws InvalidArgument for surfaces outside P4.
std::int64_t surface_family_dim(const SurfaceModel& s);

/// A tabulated move of a curve from one surface to another: a general
/// curve with these invariants (and Rao kind) lies on `surface` in class `cls`.
struct Reembedding {
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  std::string rao_kind;  // "zero", "simple_k", "M_a", "unknown"
  std::optional<std::string> from_surface;  // any surface when empty
  std::string to_surface;
  DivisorClass cls;
  std::string note;
};

/// The surface catalog: named models plus the re-embedding table.
class Catalog {
public:
  static constexpr int kSchemaVersion = 1;

  /// Parses and validates a catalog document (JSON). Throws CatalogError.
  static Catalog from_json_text(std::string_view text);
  static Catalog load(const std::filesystem::path& path);
  /// The catalog shipped with the library (data/catalog.json, compiled in).
  static const Catalog& builtin();

  std::shared_ptr<const SurfaceModel> get_surface(std::string_view id) const;
  bool has_surface(std::string_view id) const;
  std::vector<std::string> surface_ids() const;

  const std::vector<Reembedding>& reembeddings() const { return reembeddings_; }

private:
  std::map<std::string, std::shared_ptr<const SurfaceModel>, std::less<>> surfaces_;
  std::vector<std::string> order_;
  std::vector<Reembedding> reembeddings_;
};

/// Builtin-catalog shorthand for get_surface.
std::shared_ptr<const SurfaceModel> get_surface(std::string_view id);

/// Raw text of the compiled-in catalog.
std::string_view builtin_catalog_text();

}  // namespace liaison

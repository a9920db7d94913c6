#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liaison {

class SurfaceModel;

/// Which Picard lattice a class lives in.
struct BasisTag {
  enum class Kind { blownup_plane, quadric };

  Kind kind = Kind::blownup_plane;
  int points = 0;  // number of blown-up points; 0 for the quadric

  static BasisTag blownup_plane(int n) { return {Kind::blownup_plane, n}; }
  static BasisTag quadric() { return {Kind::quadric, 0}; }

  /// Rank of the lattice: 1 + n for blown-up planes, 2 for the quadric.
  std::size_t rank() const {
    return kind == Kind::quadric ? 2 : static_cast<std::size_t>(points) + 1;
  }

  std::string to_string() const;

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
  friend auto operator<=>(const BasisTag&, const BasisTag&) = default;
};

/// A divisor class.
///
/// On a blown-up plane the coefficients (a; b1..bn) stand for a*l - sum bi*ei,
/// where l is the pullback of a line and ei are the exceptional curves.
/// On the quadric, (a, b) is a class of bidegree (a, b).
///
/// Plain value type with structural equality; the total order is lexicographic
/// on (basis, coefficients) and is what every deterministic search sorts by.
class DivisorClass {
public:
  using Int = std::int64_t;

  DivisorClass() = default;
  DivisorClass(BasisTag basis, std::vector<Int> coeffs);

  /// (a; b1..bn) on the plane blown up in n = bs.size() points.
  static DivisorClass plane(Int a, std::initializer_list<Int> bs);
  static DivisorClass plane(Int a, std::span<const Int> bs);
  static DivisorClass quadric(Int a, Int b);
  static DivisorClass zero(BasisTag basis);

  /// Exceptional curve e_i (1-based) as a class, i.e. (0; 0..,-1,..0).
  static DivisorClass exceptional(int n, int i);

  const BasisTag& basis() const { return basis_; }
  std::span<const Int> coeffs() const { return coeffs_; }
  Int operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(Int k, const DivisorClass& c);

  /// Largest absolute coefficient.
  Int max_abs() const;

  /// "(5;3,1,1,1,1)" or "(a,b)" on the quadric.
  std::string to_string() const;

  /// Parses "5;3,1,1,1,1", "(5;3,1,1,1,1)" or "5,3,1,1,1,1" into a class on
  /// `basis`. For blown-up planes the first entry is a; for the quadric both
  /// entries are the bidegree. Throws InvalidArgument on malformed input.
  static DivisorClass parse(std::string_view text, BasisTag basis);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
  BasisTag basis_;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// Intersection pairing. Blown-up plane: a*a' - sum bi*bi'. Quadric: ab' + a'b.
/// Throws BasisMismatch when the classes live in different lattices.
std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

std::int64_t self_intersection(const DivisorClass& c);

/// C . H on the surface.
std::int64_t degree(const DivisorClass& c, const SurfaceModel& s);

/// Adjunction: g = (C^2 + C.K)/2 + 1. Integrality is guaranteed by the
/// parity of C^2 + C.K on these lattices (checked, not assumed).
std::int64_t arithmetic_genus(const DivisorClass& c, const SurfaceModel& s);

/// Riemann-Roch value C.(C - K)/2 on a rational surface.
///
/// This is dim|C| for a nonspecial effective class (h^1 = h^2 = 0); it is an
/// estimate and not a certified h^0 - 1.
std::int64_t expected_dim_linear_system(const DivisorClass& c, const SurfaceModel& s);

/// Holomorphic Euler characteristic chi(O(C)) = C.(C - K)/2 + 1.
std::int64_t euler_characteristic(const DivisorClass& c, const SurfaceModel& s);

/// The standard canonical class: (-3; -1,...,-1) or (-2,-2).
DivisorClass standard_canonical(BasisTag basis);

}  // namespace liaison

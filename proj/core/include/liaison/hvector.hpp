#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace liaison {

/// h-vector of a zero-dimensional scheme (or the Artinian reduction of an ACM
/// scheme): nonnegative integers with trailing zeros trimmed. `codim` is the
/// number of variables of the Artinian reduction (2 for points in P2, 3 for P3).
class HVector {
public:
  using Int = std::int64_t;

  HVector() = default;
  HVector(std::vector<Int> entries, int codim);
  HVector(std::initializer_list<Int> entries, int codim = 3);

  const std::vector<Int>& entries() const { return entries_; }
  int codim() const { return codim_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// h(i), zero past the end.
  Int operator[](std::size_t i) const { return i < entries_.size() ? entries_[i] : 0; }
  /// Sum of entries: the number of points.
  Int mass() const;
  /// Last index with a nonzero entry (socle degree for Gorenstein vectors).
  std::int64_t top_degree() const { return static_cast<std::int64_t>(entries_.size()) - 1; }

  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

private:
  std::vector<Int> entries_;
  int codim_ = 3;
};

/// Macaulay's bound h^<i>: the largest possible value of h(i+1) given h(i) = h.
std::int64_t macaulay_bound(std::int64_t h, std::int64_t i);

/// h(0) = 1, h(1) <= codim, and h(i+1) <= h(i)^<i> for every i >= 1.
bool is_O_sequence(const HVector& h);

/// Number of variables of the Artinian reduction for points in `ambient_dim`-space.
enum class PointAmbient { P2 = 2, P3 = 3 };

/// h-vector of n general points: greedy maximal growth. With `surface_degree`
/// e, the points are general on a surface (curve in P2) of degree e, so the
/// growth is capped by the h-vector of that hypersurface.
HVector generic_points_h_vector(std::int64_t n, PointAmbient ambient,
                                std::optional<std::int64_t> surface_degree = std::nullopt);

/// Codim 3: symmetric, and the first half is a differentiable O-sequence
/// (SI-sequence). Codim 2: symmetric O-sequence with h(1) <= 2, i.e. the
/// h-vector of a complete intersection. Throws InvalidArgument otherwise.
bool is_gorenstein_h_vector(const HVector& h);

/// Residual h-vector of Z in the Gorenstein scheme W of socle degree s:
/// r(i) = w(i) - z(s - i). Throws LinkError (with the failing index) when Z
/// is not contained in W numerically, when the residual is empty, or when it
/// is not an O-sequence.
HVector link_h_vector(const HVector& z, const HVector& w);

/// Every Gorenstein h-vector in `codim` with mass <= max_mass and socle degree
/// <= max_socle, in lexicographic order.
std::vector<HVector> gorenstein_h_vectors(int codim, std::int64_t max_mass, std::int64_t max_socle);

/// (d, g) of an ACM curve whose general hyperplane section has h-vector h:
/// d = sum h(i), g = 1 + sum (i - 1) h(i).
std::pair<std::int64_t, std::int64_t> acm_curve_invariants(const HVector& h);

struct AcmCandidate {
  HVector h;
  std::int64_t degree;
  std::int64_t genus;
};

/// h-vectors (1, 3, ...) of nondegenerate integral ACM curves in P4 with
/// degree <= max_degree: O-sequences in three variables whose partial sums
/// satisfy the uniform-position bound sum_{i<=n} h(i) >= min(d, 3n + 1).
/// Sorted by (degree, genus, h).
std::vector<AcmCandidate> acm_curves_in_p4(std::int64_t max_degree);

/// gamma = -Delta^3 phi, stored from index 0 with trailing zeros trimmed.
struct PostulationCharacter {
  std::vector<std::int64_t> values;
  std::int64_t degree = 0;

  std::int64_t operator[](std::size_t n) const { return n < values.size() ? values[n] : 0; }
  std::string to_string() const;

  friend bool operator==(const PostulationCharacter&, const PostulationCharacter&) = default;
};

/// Character of a curve from its Hilbert function phi(0..N), phi = 0 in
/// negative degrees. The last three values must already lie on a line of
/// positive slope (the degree); otherwise InvalidArgument.
PostulationCharacter postulation_character(const std::vector<std::int64_t>& phi);

/// gamma(0) = -1 and, from the first n >= 1 with gamma(n) >= 0 on, gamma >= 0.
bool character_is_positive(const PostulationCharacter& g);

/// {n : gamma(n) > 0} is an interval.
bool character_is_connected(const PostulationCharacter& g);

}  // namespace liaison

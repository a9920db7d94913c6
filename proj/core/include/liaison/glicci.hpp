#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/hvector.hpp"

namespace liaison {

/// Every Gorenstein w in the codimension of z with z(i) <= w(i) for all i,
/// mass(w) <= max_mass and socle degree <= max_socle, lexicographically.
std::vector<HVector> ag_candidates_containing(const HVector& z, std::int64_t max_mass,
                                              std::int64_t max_socle = 12);

enum class GlicciMode { full, descending_only };

/// Which residuals may appear as intermediate point sets.
enum class Admissibility {
  generic,     // the residual must be the generic h-vector of its mass
  on_surface,  // generic among points on a hypersurface of degree surface_degree
  permissive,  // any O-sequence
};

std::string to_string(GlicciMode m);
std::string to_string(Admissibility a);

struct GlicciConfig {
  PointAmbient ambient = PointAmbient::P3;
  GlicciMode mode = GlicciMode::full;
  std::optional<std::int64_t> max_intermediate;  // default 3n: largest mass of any visited state
  std::int64_t max_socle = 12;
  Admissibility admissibility = Admissibility::generic;
  std::int64_t surface_degree = 3;               // used by on_surface only
  unsigned workers = 1;
};

struct PointLink {
  HVector from;
  HVector w;  // the Gorenstein h-vector linked in
  HVector to;
};

struct PointChain {
  HVector start;
  std::vector<PointLink> links;
  bool monotone_descending = true;           // every link strictly lowers the mass
  std::int64_t max_intermediate_degree = 0;  // largest mass strictly between the ends (0 if none)
  std::int64_t max_linking_degree = 0;       // largest mass of a linking w

  const HVector& end() const { return links.empty() ? start : links.back().to; }
  /// Re-derives every link from scratch: w Gorenstein, to = link(from, w),
  /// consecutive states agree, end is a single point.
  void validate() const;
};

struct GlicciReport {
  bool found = false;
  PointChain chain;
  std::size_t explored = 0;
  std::size_t gorenstein_candidates = 0;
  std::string outcome;  // "found", "exhausted state space"
  std::int64_t points = 0;
  GlicciConfig bounds;  // with defaults resolved
};

/// Bidirectional breadth-first search between the generic h-vector of n
/// points and (1), through Gorenstein links whose residuals are admissible.
/// Returns a shortest chain, or a report of the exhausted search. The result
/// does not depend on the worker count.
GlicciReport glicci_chain(std::int64_t n, const GlicciConfig& config = {});

}  // namespace liaison

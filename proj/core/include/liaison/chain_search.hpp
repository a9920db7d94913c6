#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/linkage.hpp"

namespace liaison {

/// What the search is looking for: a (d, g) pair, or a specific class on a
/// specific surface.
struct SearchTarget {
  std::int64_t degree = 1;
  std::int64_t genus = 0;
  std::optional<std::string> surface;
  std::optional<DivisorClass> cls;

  static SearchTarget invariants(std::int64_t d, std::int64_t g) { return {d, g, {}, {}}; }
  static SearchTarget divisor(const SurfaceModel& s, DivisorClass c);

  bool matches(const CurveRecord& c) const;
};

struct ChainSearchConfig {
  std::vector<std::string> surfaces;  // allowed catalog surfaces, must be non-empty
  bool ascending_only = true;
  int max_steps = 8;                  // liaison moves; re-witnessing is free
  std::int64_t h_max = 4;             // |h| and m range per move
  std::int64_t coeff_bound = 60;      // |a|, |bi| box for every visited class
  std::optional<std::int64_t> degree_cap;  // defaults to 3 * target degree + 10
  /// Starting records (witnessed). Empty: every line class on every allowed
  /// surface, with Rao module zero.
  std::vector<CurveRecord> starts;
  unsigned workers = 1;
  const Catalog* catalog = nullptr;   // builtin when null
};

struct SearchReport {
  bool found = false;
  Chain chain;                      // meaningful when found
  std::size_t explored = 0;         // distinct states visited
  std::size_t frontier = 0;         // size of the last frontier
  int levels = 0;                   // liaison depth reached
  std::size_t pruned_screen = 0;
  std::size_t pruned_box = 0;
  std::size_t pruned_degree = 0;
  std::vector<std::string> pruning_log;  // first few pruned classes
  std::string outcome;              // "found", "exhausted state space", "step budget exhausted"
  ChainSearchConfig bounds;         // the bounds actually used
};

/// Level-synchronous breadth-first search over (surface, class, Rao tag)
/// states. Level k holds states reachable with k liaison moves; re-witnessing
/// through the catalog's re-embedding table stays on the same level.
/// Expansion order is canonical, so the returned chain is the same for any
/// worker count. Failure is reported, never thrown.
SearchReport ascending_chain_search(const SearchTarget& target, const ChainSearchConfig& config);

}  // namespace liaison

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/report.hpp"

namespace liaison {

struct ExperimentOptions {
  /// Restricts the surfaces used by the searches inside an experiment; an
  /// empty list is rejected by the experiments that search.
  std::optional<std::vector<std::string>> surfaces;
  const Catalog* catalog = nullptr;  // builtin when null
  unsigned workers = 1;              // inside a single experiment's searches
};

/// Registered ids, in presentation order.
const std::vector<std::string>& experiment_ids();

bool has_experiment(std::string_view id);

/// Runs one experiment. Unknown ids raise InvalidArgument listing the
/// registered ones; a mismatch is reported in the result, never thrown.
ExperimentReport run_experiment(std::string_view id, const ExperimentOptions& opts = {});

}  // namespace liaison

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liaison/chain_search.hpp"
#include "liaison/glicci.hpp"

namespace liaison {

/// Where a reference value comes from: stated in the source literature,
/// computed independently of the code under test, or immediate.
enum class Provenance { paper, derived, trivial };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct ReportEntry {
  std::string name;
  nlohmann::json computed;
  std::optional<nlohmann::json> reference;  // none: informational
  Provenance provenance = Provenance::derived;
  bool match = true;
  std::string note;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ExperimentReport {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string id;
  std::string anchor;
  std::vector<ReportEntry> entries;
  double runtime_ms = 0.0;

  /// Compares computed against reference and records the entry.
  void check(std::string name, nlohmann::json computed, nlohmann::json reference, Provenance prov,
             std::string note = {});
  /// Records a value that is reported but not asserted.
  void info(std::string name, nlohmann::json computed, std::string note = {});

  bool all_match() const;
  std::size_t mismatches() const;

  nlohmann::json to_json() const;
  static ExperimentReport from_json(const nlohmann::json& j);
  std::string to_table() const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

nlohmann::json to_json(const DivisorClass& c);
nlohmann::json to_json(const RaoTag& r);
nlohmann::json to_json(const CurveRecord& c);
nlohmann::json to_json(const ChainStep& s);
nlohmann::json to_json(const Chain& c);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const HVector& h);
nlohmann::json to_json(const PointChain& c);
nlohmann::json to_json(const GlicciReport& r);

std::string chain_table(const Chain& c);
std::string point_chain_table(const PointChain& c);

}  // namespace liaison

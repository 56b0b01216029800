// Verification suites tying the Jack side to the map side, plus the disk
// cache for the expensive tables. Suites never abort on the first failure:
// every offending key is collected, and a failing check names the triple and
// both exact values.

#pragma once

#include "bmaps/table_io.hpp"

#include <optional>

namespace bmaps {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string detail; // offending keys / values, or cache provenance notes
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  std::vector<std::string> rules;
  std::vector<CheckResult> checks;
  nlohmann::json observations = nlohmann::json::array(); // experimental only
  double seconds = 0.0;

  bool all_pass() const;
  int failure_count() const;
  nlohmann::json to_json() const;
};

void print_report(const SuiteReport& r, std::ostream& os);

// Content-checked JSON cache under $BMAPS_CACHE_DIR (disabled when unset).
// Files are written whole via a temp file and rename; payloads carry a
// checksum that is verified on load.
namespace cache {
bool enabled();
std::optional<nlohmann::json> load(const std::string& key);
void store(const std::string& key, const nlohmann::json& body);
} // namespace cache

// Cached tables. Every cache hit is cross-examined against a fresh
// recomputation: the h-table against a full low-degree rebuild, the eta
// table against one re-enumerated type picked from the payload checksum.
// A mismatch falls back to recomputation and is reported in *note.
HTable cached_htable(int n_max, std::string* note = nullptr);
EtaTable cached_eta_table(int n, const OrientationRule& rule,
                          std::string* note = nullptr);

SuiteReport suite_jack(int n_max);
SuiteReport suite_map_series(int n_max);
SuiteReport suite_unicellular(int n_max, const std::vector<OrientationRule>& rules);
SuiteReport suite_marginal(int n_max, const std::vector<OrientationRule>& rules,
                           int refined_n_max);
SuiteReport suite_experimental(int n_max, const std::vector<OrientationRule>& rules);

} // namespace bmaps

// bmaps: exact tables and verification suites for the Jack-polynomial map
// series and the measures of non-orientability.
//
//   bmaps jack --n 4 --json
//   bmaps htable --n 5 --json out.json --csv out.csv
//   bmaps enumerate --n 4 [--type "2,1:2,1:3" | --type "2,1:2,1:"] [--audit-dedup] [--json]
//   bmaps etatable --n 4 --orientation seeded:7
//   bmaps verify --suite all --n-max 5 --orientation canonical,seeded:1 [--json report.json]

#include "bmaps/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <unordered_set>

namespace {

using namespace bmaps;

std::vector<OrientationRule> parse_rules(const std::string& spec) {
  std::vector<OrientationRule> rules;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) rules.push_back(OrientationRule::parse(tok));
  }
  if (rules.empty()) rules.push_back(OrientationRule::canonical());
  return rules;
}

MapType parse_type(const std::string& text) {
  std::vector<std::string> pieces;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  pieces.push_back(cur);
  if (pieces.size() != 3)
    throw CLI::ValidationError("--type expects MU:NU:TAU");
  return MapType{Partition::parse(pieces[0]), Partition::parse(pieces[1]),
                 Partition::parse(pieces[2])};
}

int run_enumerate(int n, const std::string& type_text, bool audit, bool as_json) {
  std::map<MapType, long> counts;
  std::unordered_set<std::uint64_t> keys;
  std::vector<std::vector<std::int32_t>> full_keys;
  long total = 0, dup = 0;
  bool filter = !type_text.empty();
  MapType want;
  if (filter) want = parse_type(type_text);

  nlohmann::json maps = nlohmann::json::array();
  enumerate_maps(n, [&](const RootedMap& m) {
    MapType ty = m.map_type();
    if (filter && !(ty == want)) return;
    ++total;
    counts[ty] += 1;
    if (audit) {
      auto key = m.canonical_key();
      std::uint64_t h = m.canonical_hash();
      if (!keys.insert(h).second) {
        // hash collision or a true duplicate; confirm on the full key
        if (std::find(full_keys.begin(), full_keys.end(), key) != full_keys.end())
          ++dup;
      }
      full_keys.push_back(std::move(key));
    }
    if (as_json) {
      nlohmann::json jm;
      jm["type"] = ty.to_string();
      jm["key"] = m.canonical_key();
      maps.push_back(std::move(jm));
    }
  });

  if (as_json) {
    nlohmann::json out;
    out["n"] = n;
    out["count"] = total;
    if (audit) out["duplicates"] = dup;
    out["maps"] = std::move(maps);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [ty, c] : counts)
      std::cout << ty.to_string() << "  " << c << "\n";
    std::cout << "total " << total << " rooted bipartite maps with " << n
              << " edge(s)\n";
    if (audit)
      std::cout << "dedup audit: " << dup << " duplicate canonical key(s)\n";
  }
  return audit && dup > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Jack/map-series laboratory"};
  app.require_subcommand(1);

  int n = 4;
  int n_max = 4;
  std::string json_path, csv_path, type_text, orientation = "canonical";
  std::string suite = "all";
  bool audit = false, to_stdout_json = false;

  auto* jack_cmd = app.add_subcommand("jack", "dump the Jack table with norms");
  jack_cmd->add_option("--n", n, "degree")->required();
  jack_cmd->add_flag("--json", to_stdout_json, "emit JSON to stdout");

  auto* htable_cmd = app.add_subcommand("htable", "h coefficient table");
  htable_cmd->add_option("--n", n, "max degree")->required();
  htable_cmd->add_option("--json", json_path, "write JSON to file");
  htable_cmd->add_option("--csv", csv_path, "write CSV to file");

  auto* enum_cmd = app.add_subcommand("enumerate", "rooted bipartite maps");
  enum_cmd->add_option("--n", n, "edge count")->required();
  enum_cmd->add_option("--type", type_text, "filter by MU:NU:TAU");
  enum_cmd->add_flag("--audit-dedup", audit, "check canonical keys are unique");
  enum_cmd->add_flag("--json", to_stdout_json, "emit JSON to stdout");

  auto* eta_cmd = app.add_subcommand("etatable", "per-type eta polynomials");
  eta_cmd->add_option("--n", n, "edge count")->required();
  eta_cmd->add_option("--orientation", orientation,
                      "canonical or seeded:SEED (single rule)");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd
      ->add_option("--suite", suite,
                   "jack|map-series|unicellular|marginal|experimental|all")
      ->required();
  verify_cmd->add_option("--n-max", n_max, "largest n to verify")->required();
  verify_cmd->add_option("--orientation", orientation,
                         "comma-separated rules, e.g. canonical,seeded:1");
  verify_cmd->add_option("--json", json_path, "write the full report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*jack_cmd) {
      std::cout << jack_table_to_json(n).dump(2) << "\n";
      return 0;
    }
    if (*htable_cmd) {
      std::string note;
      HTable h = cached_htable(n, &note);
      if (!note.empty()) std::cerr << note << "\n";
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        htable_to_csv(h, out);
      }
      nlohmann::json j = htable_to_json(h);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << j.dump(2);
      }
      if (json_path.empty() && csv_path.empty()) std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*enum_cmd) return run_enumerate(n, type_text, audit, to_stdout_json);
    if (*eta_cmd) {
      EtaTable t = cached_eta_table(n, OrientationRule::parse(orientation));
      std::cout << eta_table_to_json(t).dump(2) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      std::vector<OrientationRule> rules = parse_rules(orientation);
      std::vector<SuiteReport> reports;
      auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
      if (want("jack")) reports.push_back(suite_jack(n_max));
      if (want("map-series")) reports.push_back(suite_map_series(n_max));
      if (want("unicellular")) reports.push_back(suite_unicellular(n_max, rules));
      if (want("marginal"))
        reports.push_back(suite_marginal(n_max, rules, std::min(n_max, 4)));
      if (want("experimental"))
        reports.push_back(suite_experimental(std::min(n_max, 4), rules));
      if (reports.empty()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      int failures = 0;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : reports) {
        print_report(r, std::cout);
        failures += r.failure_count();
        all.push_back(r.to_json());
      }
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << all.dump(2);
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

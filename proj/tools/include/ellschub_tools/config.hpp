#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellschub/fga/formal_group_algebra.hpp"
#include "ellschub/gkm/schubert.hpp"

namespace ellschub::tools {

enum class OutputFormat { Json, Text };

// Defaults: hecke mode, root chart, json output, canonical display, no cache,
// one job, gcd degree bound 400.
struct RunConfig {
  std::optional<Family> family;
  std::optional<int> rank;
  FglMode mode = FglMode::Hecke;
  bool mode_set = false;
  Chart chart = Chart::Root;
  OutputFormat format = OutputFormat::Json;
  Display display = Display::Canonical;
  std::string cache_dir;
  int jobs = 1;
  unsigned gcd_degree_bound = 400;
  std::string fixture_dir;

  std::optional<CartanSpec> spec() const;
  // Throws Error(Parse) or Error(UnsupportedSpec).
  void validate() const;
};

struct BatchEntry {
  std::string suite;
  std::optional<CartanSpec> spec;
  std::optional<FglMode> mode;
};

// JSON object with keys family, rank, mode, chart, format, display, cache,
// jobs, gcd_degree_bound, fixtures and an optional "suites" array of
// {"suite", "family", "rank", "mode"} entries. Throws Error(Parse).
void apply_config_file(const std::string& path, RunConfig& cfg, std::vector<BatchEntry>& batch);

OutputFormat parse_format(const std::string& s);
Display parse_display(const std::string& s);

}  // namespace ellschub::tools

#include "ellschub_tools/config.hpp"

#include <fstream>

#include "ellschub/errors.hpp"
#include "json.hpp"

namespace ellschub::tools {

std::optional<CartanSpec> RunConfig::spec() const {
  if (!family) return std::nullopt;
  int r = rank.value_or(*family == Family::G2 ? 2 : 0);
  return CartanSpec{*family, r};
}

void RunConfig::validate() const {
  if (family && !rank && *family != Family::G2) throw Error(ErrorKind::Parse, "--rank is required with --family");
  if (rank && !family) throw Error(ErrorKind::Parse, "--family is required with --rank");
  if (auto s = spec()) RootSystem::build(*s);
  if (jobs < 1) throw Error(ErrorKind::Parse, "--jobs must be positive");
  if (mode == FglMode::Additive && chart == Chart::Exp)
    throw Error(ErrorKind::WrongMode, "the exponential chart is not available for the additive law");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorKind::Parse, "unknown format " + s);
}

Display parse_display(const std::string& s) {
  if (s == "canonical") return Display::Canonical;
  if (s == "bracket") return Display::Bracket;
  throw Error(ErrorKind::Parse, "unknown display " + s);
}

void apply_config_file(const std::string& path, RunConfig& cfg, std::vector<BatchEntry>& batch) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    if (!j.is_object()) throw Error(ErrorKind::Parse, "config must be a JSON object");
    if (j.contains("family")) cfg.family = parse_family(j["family"].get<std::string>());
    if (j.contains("rank")) cfg.rank = j["rank"].get<int>();
    if (j.contains("mode")) {
      cfg.mode = parse_mode(j["mode"].get<std::string>());
      cfg.mode_set = true;
    }
    if (j.contains("chart")) cfg.chart = parse_chart(j["chart"].get<std::string>());
    if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
    if (j.contains("display")) cfg.display = parse_display(j["display"].get<std::string>());
    if (j.contains("cache")) cfg.cache_dir = j["cache"].get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("gcd_degree_bound")) cfg.gcd_degree_bound = j["gcd_degree_bound"].get<unsigned>();
    if (j.contains("fixtures")) cfg.fixture_dir = j["fixtures"].get<std::string>();
    if (j.contains("suites")) {
      for (const auto& e : j["suites"]) {
        BatchEntry b;
        b.suite = e.at("suite").get<std::string>();
        if (e.contains("family")) {
          Family f = parse_family(e["family"].get<std::string>());
          b.spec = CartanSpec{f, e.value("rank", f == Family::G2 ? 2 : 0)};
        }
        if (e.contains("mode")) b.mode = parse_mode(e["mode"].get<std::string>());
        batch.push_back(std::move(b));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("config ") + path + ": " + e.what());
  }
}

}  // namespace ellschub::tools

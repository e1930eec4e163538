#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "ellschub/errors.hpp"
#include "ellschub/gkm/schubert.hpp"
#include "ellschub_tools/checks.hpp"
#include "ellschub_tools/config.hpp"
#include "json.hpp"

using namespace ellschub;
using namespace ellschub::tools;

namespace {

struct Flags {
  std::string family, mode, chart, format, display, cache, config, fixtures;
  int rank = 0;
  int jobs = 0;
  unsigned gcd = 0;
  std::string word, element;
  int k = 0;
  bool have_word = false, have_k = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--family", f.family, "A, B, C, D or G2");
  app->add_option("--rank", f.rank, "rank of the root system");
  app->add_option("--mode", f.mode, "generic, additive, ktheory, lorentz or hecke");
  app->add_option("--chart", f.chart, "root or exp");
  app->add_option("--format", f.format, "json or text");
  app->add_option("--display", f.display, "canonical or bracket");
  app->add_option("--cache", f.cache, "directory for KL tables");
  app->add_option("--jobs", f.jobs, "parallelism degree");
  app->add_option("--gcd-degree-bound", f.gcd, "largest denominator degree reduced by gcd");
  app->add_option("--config", f.config, "JSON config file");
}

RunConfig build_config(const Flags& f, std::vector<BatchEntry>& batch) {
  RunConfig cfg;
  if (const char* env = std::getenv("ELLSCHUB_CACHE_DIR")) cfg.cache_dir = env;
#ifdef ELLSCHUB_DEFAULT_FIXTURES
  cfg.fixture_dir = ELLSCHUB_DEFAULT_FIXTURES;
#endif
  if (!f.config.empty()) apply_config_file(f.config, cfg, batch);
  if (!f.family.empty()) cfg.family = parse_family(f.family);
  if (f.rank) cfg.rank = f.rank;
  if (!f.mode.empty()) {
    cfg.mode = parse_mode(f.mode);
    cfg.mode_set = true;
  }
  if (!f.chart.empty()) cfg.chart = parse_chart(f.chart);
  if (!f.format.empty()) cfg.format = parse_format(f.format);
  if (!f.display.empty()) cfg.display = parse_display(f.display);
  if (!f.cache.empty()) cfg.cache_dir = f.cache;
  if (f.jobs) cfg.jobs = f.jobs;
  if (f.gcd) cfg.gcd_degree_bound = f.gcd;
  if (!f.fixtures.empty()) cfg.fixture_dir = f.fixtures;
  cfg.validate();
  return cfg;
}

void progress(const std::string& msg) { std::cerr << "[ellschub] " << msg << std::endl; }

int run_compute(const std::string& kind, const Flags& f) {
  std::vector<BatchEntry> batch;
  RunConfig cfg = build_config(f, batch);
  auto spec = cfg.spec();
  if (!spec) throw Error(ErrorKind::Parse, "compute needs --family and --rank");
  auto group = WeylGroup::build(*spec);
  auto S = FormalGroupAlgebra::create(group, cfg.mode, cfg.chart, RingConfig{cfg.gcd_degree_bound});
  const bool hecke = cfg.mode == FglMode::Hecke;
  SchubertCalculus sc(S, hecke ? kl_table(group, cfg.cache_dir, progress) : nullptr);
  const WeylGroup& G = *group;

  GkmClass c(S);
  std::string index, kind_name, note;
  if (kind == "bs") {
    if (!f.have_word) throw Error(ErrorKind::Parse, "compute bs needs --word");
    Word w = (f.word.empty() || f.word == "e") ? Word{} : G.parse_word(f.word);
    c = sc.bott_samelson(w);
    kind_name = "bott_samelson";
    index = G.format_word(w);
  } else if (kind == "kls" || kind == "smooth") {
    if (f.element.empty()) throw Error(ErrorKind::Parse, "compute " + kind + " needs --element");
    WeylElem w = G.parse(f.element);
    index = w == G.identity() ? "id" : G.format(w);
    if (kind == "kls") {
      c = sc.kl_schubert(w);
      kind_name = "kl_schubert";
    } else {
      c = sc.smooth_class(w);
      kind_name = "smooth";
      if (!sc.kl().rationally_smooth(w)) note = "formula value, not a class";
    }
  } else if (kind == "point") {
    c = sc.point_class();
    kind_name = "point";
  } else if (kind == "rho") {
    if (!f.have_k) throw Error(ErrorKind::Parse, "compute rho needs --k");
    c = rho(S, f.k);
    kind_name = "rho";
    index = std::to_string(f.k);
  } else {
    throw Error(ErrorKind::Parse, "unknown class kind " + kind);
  }

  if (cfg.format == OutputFormat::Json) {
    auto j = nlohmann::ordered_json::parse(class_to_json(c, kind_name, index, cfg.display));
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump(2) << "\n";
  } else {
    if (!note.empty()) std::cout << "# " << note << "\n";
    std::cout << class_to_text(c, kind_name, index, cfg.display);
  }
  return 0;
}

int run_check(const std::vector<std::string>& suites, const Flags& f) {
  std::vector<BatchEntry> batch;
  RunConfig cfg = build_config(f, batch);
  for (const auto& s : suites) batch.push_back(BatchEntry{s, cfg.spec(), cfg.mode_set ? std::optional(cfg.mode) : std::nullopt});
  if (batch.empty()) throw Error(ErrorKind::Parse, "no suite given");
  std::vector<SuiteReport> reports;
  for (const auto& b : batch) {
    CheckOptions opt;
    opt.spec = b.spec;
    opt.mode = b.mode;
    opt.fixture_dir = cfg.fixture_dir;
    opt.cache_dir = cfg.cache_dir;
    opt.progress = progress;
    progress("suite " + b.suite + (b.spec ? " " + b.spec->name() : std::string()));
    reports.push_back(run_suite(b.suite, opt));
    progress("suite " + b.suite + (reports.back().ok() ? " passed" : " failed"));
  }
  std::cout << (cfg.format == OutputFormat::Json ? report_to_json(reports) + "\n" : report_to_text(reports));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant elliptic Schubert calculus in the GKM model"};
  app.require_subcommand(1);
  Flags f;

  std::string kind;
  auto* compute = app.add_subcommand("compute", "compute a class and print its GKM values");
  compute->add_option("kind", kind, "bs, kls, smooth, point or rho")->required();
  auto* word = compute->add_option("--word", f.word, "reduced word in labels, e.g. 1,2,1");
  compute->add_option("--element", f.element, "element: s-sequence, one-line or window notation");
  auto* kopt = compute->add_option("--k", f.k, "rho index");
  add_common(compute, f);

  std::vector<std::string> suites;
  auto* check = app.add_subcommand("check", "run verification suites");
  check->add_option("suites", suites, "suite names")->check(CLI::IsMember(suite_names()));
  check->add_option("--fixtures", f.fixtures, "directory with certificate files");
  add_common(check, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  f.have_word = word->count() > 0;
  f.have_k = kopt->count() > 0;
  try {
    if (*compute) return run_compute(kind, f);
    return run_check(suites, f);
  } catch (const Error& e) {
    std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellschub/fga/formal_group_algebra.hpp"
#include "ellschub/hecke/hecke_algebra.hpp"

namespace ellschub::tools {

struct CheckItem {
  std::string name;
  bool ok = false;
  bool asserted = true;  // reported items never fail a suite
  double seconds = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;
  bool ok() const;
  double seconds() const;
  void append(const SuiteReport& other);
};

using Progress = std::function<void(const std::string&)>;

struct CheckOptions {
  std::optional<CartanSpec> spec;  // unset: the standard set for the suite
  std::optional<FglMode> mode;     // fgl suite only
  std::string fixture_dir;         // certificates for the positivity suite
  std::string cache_dir;           // KL tables; empty disables caching
  Progress progress;
};

// KL table for a group, loaded from or written to cache_dir when set.
std::shared_ptr<KLTable> kl_table(const WeylGroupPtr& group, const std::string& cache_dir, const Progress& progress = {});

const std::vector<std::string>& suite_names();
// Throws Error(Parse) for unknown suites.
SuiteReport run_suite(const std::string& suite, const CheckOptions& opt);

// Building blocks, one per family of identities.
SuiteReport check_fgl_axioms(FglMode mode);
SuiteReport check_lem0();
SuiteReport check_relations(const CartanSpec& spec);
SuiteReport check_hecke_suite(const CheckOptions& opt);
SuiteReport check_reference_tables();
SuiteReport check_lorentz_a3();
SuiteReport check_combin(const CartanSpec& spec);
// mainthm(2): S_{w0} = 1 and S_{w_m^{-1}} = rho; types A and C.
SuiteReport check_coset_classes(const CartanSpec& spec, const CheckOptions& opt);
// mainthm(1): distinct simple reflections.
SuiteReport check_distinct_products(const CartanSpec& spec, const CheckOptions& opt);
SuiteReport check_ktheory_limit(const CartanSpec& spec, const CheckOptions& opt);
SuiteReport check_rho_lemmas(const CartanSpec& spec);
SuiteReport check_triangularity(const CartanSpec& spec, const CheckOptions& opt);
SuiteReport check_positivity(const std::string& fixture_dir);
SuiteReport check_smooth_agree(const CartanSpec& spec, const CheckOptions& opt);

std::string report_to_json(const std::vector<SuiteReport>& reports);
std::string report_to_text(const std::vector<SuiteReport>& reports);

}  // namespace ellschub::tools

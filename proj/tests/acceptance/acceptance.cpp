// One PASS/FAIL line per acceptance criterion, each within its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ellschub_tools/checks.hpp"

using namespace ellschub;
using namespace ellschub::tools;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  double per_item_limit = 0;  // 0: only the total is limited
  std::function<SuiteReport()> run;
};

const CartanSpec A1{Family::A, 1}, A2{Family::A, 2}, A3{Family::A, 3}, B2{Family::B, 2}, B3{Family::B, 3},
    C2{Family::C, 2}, C3{Family::C, 3}, D3{Family::D, 3}, G2{Family::G2, 2};

CheckOptions options() {
  CheckOptions opt;
  opt.fixture_dir = ELLSCHUB_FIXTURE_DIR;
  return opt;
}

SuiteReport collect(const std::vector<std::function<SuiteReport()>>& parts) {
  SuiteReport rep;
  for (const auto& p : parts) rep.append(p());
  return rep;
}

std::vector<Criterion> criteria() {
  const CheckOptions opt = options();
  return {
      {1, "group law axioms (generic)", 1, 0, [] { return check_fgl_axioms(FglMode::Generic); }},
      {2, "lemma identities (hecke) and kappa_i = mu1 (generic)", 1, 0, [] { return check_lem0(); }},
      {3, "square and braid relations, ranks <= 3", 30, 0,
       [] {
         std::vector<std::function<SuiteReport()>> parts;
         for (auto s : {A1, A2, B2, C2, G2, A3, B3, C3, D3}) parts.push_back([s] { return check_relations(s); });
         return collect(parts);
       }},
      {4, "GKM tables on S3 and W(C2), KL-Schubert class S_s1s0s1", 60, 0, [] { return check_reference_tables(); }},
      {5, "Lorentz values and equalities on S4", 120, 0, [] { return check_lorentz_a3(); }},
      {6, "Hecke algebra and KL suite", 60, 0, [opt] { return check_hecke_suite(opt); }},
      {7, "Y expansions of KL elements in A2, B2, C2, G2", 60, 0,
       [] { return collect({[] { return check_combin(A2); }, [] { return check_combin(B2); },
                            [] { return check_combin(C2); }, [] { return check_combin(G2); }}); }},
      {8, "S_w0 = 1 and S_{w_m^-1} = rho_m in A1, A2, A3, C2, C3", 5 * 600, 600,
       [opt] {
         std::vector<std::function<SuiteReport()>> parts;
         for (auto s : {A1, A2, A3, C2, C3}) parts.push_back([s, opt] { return check_coset_classes(s, opt); });
         return collect(parts);
       }},
      {9, "S_w = smooth formula for products of distinct simple reflections, ranks <= 3", 300, 0,
       [opt] {
         std::vector<std::function<SuiteReport()>> parts;
         for (auto s : {A1, A2, B2, C2, G2, A3, B3, C3, D3}) parts.push_back([s, opt] { return check_distinct_products(s, opt); });
         return collect(parts);
       }},
      {10, "t -> 0 limit of S_w equals K-theory zeta for every reduced word in A2, C2, S4", 600, 0,
       [opt] {
         return collect({[opt] { return check_ktheory_limit(A2, opt); }, [opt] { return check_ktheory_limit(C2, opt); },
                         [opt] { return check_ktheory_limit(A3, opt); }});
       }},
      {11, "rho lemmas for A (n = 3, 4) and C (n = 2, 3)", 300, 0,
       [] {
         return collect({[] { return check_rho_lemmas(A2); }, [] { return check_rho_lemmas(A3); },
                         [] { return check_rho_lemmas(C2); }, [] { return check_rho_lemmas(C3); }});
       }},
      {12, "transition matrix in A2 and C2 is unitriangular with zeros at odd gaps", 60, 0,
       [opt] { return collect({[opt] { return check_triangularity(A2, opt); }, [opt] { return check_triangularity(C2, opt); }}); }},
      {13, "positivity certificate verifies, malformed certificates rejected", 10, 0,
       [opt] { return check_positivity(opt.fixture_dir); }},
      {14, "S_w = smooth formula for smooth w in S4 and W(C2); G2 reported", 900, 0,
       [opt] {
         return collect({[opt] { return check_smooth_agree(A3, opt); }, [opt] { return check_smooth_agree(C2, opt); },
                         [opt] { return check_smooth_agree(G2, opt); }});
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string why;
    int checked = 0, notes = 0;
    for (const auto& it : rep.items) {
      if (!it.asserted) {
        ++notes;
        std::printf("      note: %s: %s\n", it.name.c_str(), it.ok ? "agrees" : "differs");
        continue;
      }
      ++checked;
      if (!it.ok && why.empty()) why = it.name + ": " + it.detail;
      if (c.per_item_limit > 0 && it.seconds > c.per_item_limit && why.empty())
        why = it.name + " exceeded " + std::to_string(c.per_item_limit) + " s";
    }
    if (checked == 0 && why.empty()) why = "no checks ran";
    if (secs > c.limit_seconds && why.empty()) why = "time limit exceeded";
    const bool ok = why.empty();
    failed += !ok;
    std::printf("%s  criterion %2d: %s  [%d checks, %.2f s, limit %.0f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                checked, secs, c.limit_seconds, ok ? "" : "  ", why.c_str());
    if (notes) std::printf("      %d reported items\n", notes);
    std::fflush(stdout);
  }
  std::printf("%s: %d of 14 criteria failed\n", failed ? "FAILED" : "PASSED", failed);
  return failed ? 1 : 0;
}

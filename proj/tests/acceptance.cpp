// End-to-end acceptance runs: one line of output per criterion.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ptv/verify.hpp"

using namespace ptv;

namespace {

int failures = 0;

void report(const std::string& name, const std::vector<CheckResult>& results,
            double elapsed_s) {
  bool ok = true;
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::Fail) ok = false;
  if (!ok) ++failures;
  std::printf("%s  %s  (%zu checks, %.1fs)\n", ok ? "PASS" : "FAIL",
              name.c_str(), results.size(), elapsed_s);
  if (!ok)
    for (const CheckResult& r : results)
      if (r.status == CheckStatus::Fail)
        std::printf("      failed: %s n=%zu seed=%llu witness=%s\n",
                    r.check_id.c_str(), r.n,
                    static_cast<unsigned long long>(r.seed), r.witness.c_str());
  std::fflush(stdout);
}

template <typename F>
void run(const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = f();
  const double s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  report(name, results, s);
}

}  // namespace

int main() {
  const std::uint64_t seed = 20240001;

  run("fan structure, n=2..6 (counts, simpliciality, completeness)", [&] {
    std::vector<CheckResult> all;
    for (std::size_t n = 2; n <= 6; ++n)
      for (auto& r : verify_fan(n, seed)) all.push_back(std::move(r));
    return all;
  });

  run("polytope V/H, Figure-2 vertices, facet pattern, cube poset, n=2..6",
      [&] {
        std::vector<CheckResult> all;
        for (std::size_t n = 2; n <= 6; ++n)
          for (auto& r : verify_polytope(n)) all.push_back(std::move(r));
        return all;
      });

  run("q-pattern indicator, all J, 50 rational draws each, n=2..6", [&] {
    std::vector<CheckResult> all;
    for (std::size_t n = 2; n <= 6; ++n)
      for (auto& r : verify_q_pattern(n, 50, seed)) all.push_back(std::move(r));
    return all;
  });

  run("Toeplitz minor parametrization, 10^3 targets per k<=5 + analytic oracle",
      [&] { return verify_rietsch_param(5, 1000, seed); });

  run("stratum correspondence of the toric map, 25 samples/stratum, n=2..5",
      [&] {
        std::vector<CheckResult> all;
        for (std::size_t n = 2; n <= 5; ++n)
          for (auto& r : verify_psi_cells(n, 25, seed))
            all.push_back(std::move(r));
        return all;
      });

  run("cube homeomorphism onto open faces + interval endpoints, n=2..4", [&] {
    std::vector<CheckResult> all;
    for (std::size_t n = 2; n <= 4; ++n)
      for (auto& r : verify_homeomorphism(n, 25, seed))
        all.push_back(std::move(r));
    return all;
  });

  run("total nonnegativity engine, 10^3 product pairs + known negatives",
      [&] { return verify_tnn_engine(1000, seed); });

  if (failures != 0) {
    std::printf("%d criterion group(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}

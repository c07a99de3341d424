#ifndef PTV_VERIFY_HPP
#define PTV_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptv/weyl.hpp"

namespace ptv {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string check_id;
  std::size_t n = 0;
  std::optional<std::pair<SubsetJ, SubsetJ>> stratum;
  CheckStatus status = CheckStatus::Pass;
  std::optional<double> metric;
  std::uint64_t seed = 0;
  long elapsed_ms = 0;
  std::string witness;  // serialized inputs for failures
};

struct VerificationReport {
  std::string version;
  std::string config_echo;
  std::vector<CheckResult> results;
  std::size_t passed = 0, failed = 0, skipped = 0;

  void add(CheckResult r);
  bool all_passed() const { return failed == 0; }
};

struct VerifyConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  std::uint64_t seed = 20240001;
  std::size_t samples = 25;
  double tol = 1e-9;
};

std::vector<CheckResult> verify_fan(std::size_t n, std::uint64_t seed);
std::vector<CheckResult> verify_polytope(std::size_t n);
std::vector<CheckResult> verify_q_pattern(std::size_t n, std::size_t samples,
                                          std::uint64_t seed);
std::vector<CheckResult> verify_rietsch_param(std::size_t k_max,
                                              std::size_t samples,
                                              std::uint64_t seed);
std::vector<CheckResult> verify_psi_cells(std::size_t n,
                                          std::size_t samples_per_stratum,
                                          std::uint64_t seed);
std::vector<CheckResult> verify_homeomorphism(std::size_t n,
                                              std::size_t samples_per_stratum,
                                              std::uint64_t seed);
std::vector<CheckResult> verify_tnn_engine(std::size_t samples,
                                           std::uint64_t seed);

VerificationReport run_all(const VerifyConfig& config);

std::string check_result_to_json(const CheckResult& r);
std::string report_to_json_lines(const VerificationReport& rep);

}  // namespace ptv

#endif

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace csm::selftest {

inline constexpr std::uint64_t default_seed = 20240611;

struct CriterionResult {
  int         id;
  std::string name;
  bool        passed;
  std::string detail;
  double      seconds;
};

/// One line: "PASS [id] name (seconds s): detail" or the same with FAIL.
std::string format_result(CriterionResult const& r);

CriterionResult oracle_agreement(std::uint64_t seed);
CriterionResult associativity_screen();
CriterionResult powering_bound();
CriterionResult commutative_compilation();
CriterionResult group_pipeline();
CriterionResult boolean_simulation();
CriterionResult reduction_round_trip(std::uint64_t seed);
CriterionResult squaring_structure(std::uint64_t seed);
CriterionResult join_witness();

inline constexpr int criterion_count = 9;

/// Runs criterion id (1-based).
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs the given criteria (all when empty) and reports each result as soon
/// as it is known.
std::vector<CriterionResult> run(
    std::vector<int> const&                      ids,
    std::uint64_t                                seed,
    std::function<void(CriterionResult const&)> const& report = {});

}  // namespace csm::selftest

#ifndef HCW_ACCEPTANCE_HPP
#define HCW_ACCEPTANCE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace hcw
{

struct CriterionResult
{
  unsigned id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs every acceptance criterion against the group files in `corpus_dir`.
// A criterion that throws is recorded as failed with the exception text.
std::vector<CriterionResult> run_acceptance(std::filesystem::path const &corpus_dir);

// One line per criterion: "PASS  3  clifford-regular-sum  detail". Timings
// are left out so that the report is byte-identical across runs.
std::string acceptance_report(std::vector<CriterionResult> const &results);

nlohmann::json acceptance_json(std::vector<CriterionResult> const &results);

} // namespace hcw

#endif // HCW_ACCEPTANCE_HPP

#ifndef RAAGCC_VERIFY_HPP
#define RAAGCC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raagcc/io.hpp"

namespace raagcc {

struct Verdict {
  std::string check;
  std::string lemma;
  bool pass = false;
  std::string details;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<Verdict> verdicts;

  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
};

inline constexpr int kCriterionCount = 10;

// Criteria 1..10. Exceptions raised by a check become failing verdicts.
CriterionResult run_criterion(int id, SuiteOptions const &opts = {});
std::vector<CriterionResult> run_suite(SuiteOptions const &opts = {});

// Base-case tokens predicted for a tree with at least three vertices.
std::vector<std::string> expected_tree_signature(Graph const &tree);
std::vector<std::string> expected_diamond_signature(int d);

Json to_json(Verdict const &v);
Json to_json(CriterionResult const &c);
std::string summary_line(CriterionResult const &c);

} // namespace raagcc

#endif // RAAGCC_VERIFY_HPP

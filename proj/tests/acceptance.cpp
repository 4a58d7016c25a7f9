// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "raagcc/verify.hpp"

int main(int argc, char **argv) {
  raagcc::SuiteOptions opts;
  bool verbose = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "-v")) verbose = true;
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: raagcc_acceptance [-v] [--seed N] [--criterion K]\n";
      return 2;
    }
  }
  int failed = 0;
  for (int id = 1; id <= raagcc::kCriterionCount; ++id) {
    if (only && id != only) continue;
    auto res = raagcc::run_criterion(id, opts);
    std::printf("%s  (%.2f s)\n", raagcc::summary_line(res).c_str(), res.seconds);
    if (verbose)
      for (auto const &v : res.verdicts)
        std::cout << "    " << (v.pass ? "ok   " : "FAIL ") << v.check << " | " << v.lemma << " | " << v.details << "\n";
    std::cout.flush();
    failed += !res.pass();
  }
  return failed ? 1 : 0;
}

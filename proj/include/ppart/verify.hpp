#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ppart {

struct VerifyOptions {
  // corpus for the reconstruction identity; the other criteria carry
  // their own fixed bounds
  int n_max = 4;
  int m_max = 2;
  int random_count = 200;      // random posets on 5 and 6 elements
  std::uint64_t seed = 20250810ULL;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long corpus_size = 0;  // number of checks behind the verdict
};

// The full verification battery, one result per criterion, exact
// arithmetic throughout.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

// Corpus driver behind the `verify-main` command: the reconstruction
// identity over all ranked posets with n <= n_max and levels <= m_max,
// plus seeded random posets when random_count > 0.
CriterionResult verify_main_corpus(const VerifyOptions& opt);

}  // namespace ppart

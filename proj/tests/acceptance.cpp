// Acceptance battery: one line per criterion, exact arithmetic, pinned
// bounds.  Exits nonzero if any criterion fails.

#include <cstdio>

#include "ppart/verify.hpp"

int main() {
  ppart::VerifyOptions opt;  // pinned defaults: n <= 4, m <= 2, 200 random posets
  auto results = ppart::run_acceptance(opt);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return all ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

namespace ppart {

// One verdict per substitution cell of a functional-equation check.
struct CheckCell {
  int m = 0;
  int i = 0;         // 0 for cells not indexed by a position (stability)
  std::string kind;  // "merge-x", "q=0", "p=0", "stability", "pq-roundtrip"
  bool ok = true;
};

struct CheckReport {
  std::vector<CheckCell> cells;

  bool all_ok() const {
    for (auto& c : cells)
      if (!c.ok) return false;
    return true;
  }

  std::vector<CheckCell> failures() const {
    std::vector<CheckCell> out;
    for (auto& c : cells)
      if (!c.ok) out.push_back(c);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (auto& c : cells) {
      s += (c.ok ? "pass" : "FAIL");
      s += " m=" + std::to_string(c.m);
      if (c.i > 0) s += " i=" + std::to_string(c.i);
      s += " " + c.kind + "\n";
    }
    return s;
  }
};

}  // namespace ppart

#pragma once

#include <string>
#include <vector>

namespace pcp {

/// Outcome of a validator: a list of failed checks, each with a witness.
struct ValidationReport {
  struct Issue {
    std::string check;    // short identifier of the axiom or invariant
    std::string witness;  // human-readable witness data
  };

  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }

  void add(const std::string& check, const std::string& witness) {
    issues.push_back({check, witness});
  }

  void merge(const ValidationReport& o, const std::string& prefix = "") {
    for (const auto& i : o.issues) issues.push_back({prefix + i.check, i.witness});
  }

  std::string str() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& i : issues) {
      s += "FAIL " + i.check;
      if (!i.witness.empty()) s += ": " + i.witness;
      s += "\n";
    }
    return s;
  }
};

}  // namespace pcp

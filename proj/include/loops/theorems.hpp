#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"

namespace loops {

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string note;
};

struct TheoremReport {
  std::vector<CheckResult> checks;
  bool any_fail() const;
  std::size_t count(CheckStatus status) const;
};

struct VerifyOptions {
  std::size_t cap = kDefaultGroupCap;
  // G-loop checks test all n^2 principal isotopes; skipped above this order.
  std::size_t gloop_max_order = 16;
};

// Evaluates every implication and equivalence of the suite on q. A check
// whose hypothesis fails is N/A; one whose groups exceed the cap is N/A with
// a note. A FAIL means a theorem is falsified on q, i.e. a bug.
TheoremReport verify_theorems(const LoopTable& q, const VerifyOptions& options = {});

// Ids of all checks in report order.
std::vector<std::string> theorem_check_ids();

// One line per check: "<loop-id> <check-id> PASS|FAIL|N/A", followed by the
// note when there is one.
std::string format_report(std::string_view loop_id, const TheoremReport& report);

// Dihedral group of order 2m: r^i s^j has id i + m*j.
LoopTable dihedral_group(std::size_t m);

}  // namespace loops

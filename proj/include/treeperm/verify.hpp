#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace treeperm {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

// perm, tree, codec, factors, edit_ops, distance, enumeration; "all" runs
// every one of them.
std::vector<std::string> verify_suites();

// Runs the cross-checks of `suite` on every size up to `max_n` (each check
// clamps this to what it can afford) and reports each result as it
// finishes. Throws Error(InvalidArgument) for an unknown suite.
std::vector<CheckResult> run_verify(std::string_view suite, std::size_t max_n,
                                    const std::function<void(const CheckResult&)>& report = {});

}  // namespace treeperm

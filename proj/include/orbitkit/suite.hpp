#pragma once

#include <span>
#include <string>
#include <vector>

#include "orbitkit/conventions.hpp"

namespace orbitkit {

enum class Scale { Small, Full };

struct SuiteOptions {
  Scale scale = Scale::Small;
  Conventions conventions;
  unsigned workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;  // one line per checked instance
  std::string failure;             // first failing instance, if any
  double seconds = 0;
};

inline constexpr int kCriterionCount = 15;

std::string criterion_title(int id);

/// Runs one acceptance criterion (1..15). Exceptions inside a criterion are
/// reported as failures, never propagated.
CriterionResult run_criterion(int id, const SuiteOptions& opt);

std::vector<CriterionResult> run_suite(const SuiteOptions& opt,
                                       std::span<const int> ids = {});

}  // namespace orbitkit

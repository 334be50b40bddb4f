#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/conventions.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/poset.hpp"
#include "orbitkit/report.hpp"

namespace orbitkit {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag combination or an input that does not parse.
struct UsageError : SpecError {
  using SpecError::SpecError;
};

struct RunConfig {
  std::string command;
  std::string poset;
  int ell = 1;
  std::string restriction;  // q:N | flags:typea | flags:b,... | bounds:a,...;b,...
  std::string family;       // labelings | partitions | gamma; empty infers
  std::string action;       // pro | bk:K | row | togpro | hpro
  std::string pi;           // threechains:a,b,c | id | file:PATH
  std::vector<int> v;
  std::vector<std::string> stats;
  std::string projection;   // con | diff
  int omega = 0;            // 0: the largest label
  std::optional<int> shift; // unset: search every generator
  std::size_t steps = 0;    // 0: order of the action
  std::optional<long long> constant;
  std::size_t cap = kDefaultCap;
  std::string out;
  std::string csv;
  std::string input;
  bool inverse = false;
  bool list = false;
  std::string scale = "small";
  unsigned workers = 1;
  Conventions conventions;
};

struct RunOutcome {
  int exit_code = kExitVerified;
  json report;
  std::string text;  // human summary, one item per line
};

/// Runs one subcommand. Throws UsageError, SpecError and CapExceeded for
/// problems with the request; a falsified claim is a normal outcome with
/// exit_code kExitFalsified.
RunOutcome run(const RunConfig& config);

/// `run` with every error mapped to its exit code and message.
RunOutcome run_guarded(const RunConfig& config);

}  // namespace orbitkit

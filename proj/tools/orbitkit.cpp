#include <CLI11.hpp>
#include <iostream>

#include "orbitkit/commands.hpp"

namespace {

void apply_mutation(orbitkit::Conventions& c, const std::string& m) {
  if (m == "flip-ideals")
    c.flip_ideal_orientation = true;
  else if (m == "reverse-togpro")
    c.reverse_togpro_sweep = true;
  else if (m == "reverse-hyperplane")
    c.reverse_hyperplane_sweep = true;
  else if (m == "reverse-row")
    c.reverse_row_sweep = true;
  else
    throw orbitkit::UsageError("unknown mutation '" + m + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion, rowmotion and their orbit statistics on P-strict "
               "labelings and Q-partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file mirroring the flags");

  orbitkit::RunConfig cfg;
  std::vector<std::string> mutations;
  app.add_option("--poset", cfg.poset, "poset spec, e.g. prod:2x2 or V");
  app.add_option("--ell", cfg.ell, "chain length / value bound")
      ->check(CLI::Range(0, 65535));
  app.add_option("--restriction", cfg.restriction,
                 "q:N | flags:typea | flags:b,... | bounds:a,...;b,...");
  app.add_option("--family", cfg.family, "labelings | partitions | gamma");
  app.add_option("--action", cfg.action, "pro | bk:K | row | togpro | hpro");
  app.add_option("--pi", cfg.pi, "threechains:a,b,c | id | file:PATH");
  app.add_option("--v", cfg.v, "sign vector for hpro")->delimiter(',');
  app.add_option("--stat", cfg.stats, "statistic spec, repeatable");
  app.add_option("--projection", cfg.projection, "con | diff");
  app.add_option("--omega", cfg.omega, "resonance frequency");
  app.add_option("--shift", cfg.shift, "rotation step for resonance");
  app.add_option("--steps", cfg.steps, "distribution length");
  app.add_option("--constant", cfg.constant, "complement constant");
  app.add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "JSON report path");
  app.add_option("--csv", cfg.csv, "CSV orbit table path");
  app.add_option("--in", cfg.input, "input states for bijection");
  app.add_flag("--inverse", cfg.inverse, "apply the inverse bijection");
  app.add_flag("--list", cfg.list, "include enumerated states in the report");
  app.add_option("--workers", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--mutate", mutations,
                 "flip-ideals | reverse-togpro | reverse-hyperplane | "
                 "reverse-row");

  const std::pair<const char*, const char*> commands[] = {
      {"enumerate", "count (and optionally list) a set"},
      {"orbits", "orbit sizes of an action"},
      {"order", "order of an action"},
      {"homomesy", "orbit averages of statistics"},
      {"distribution", "complement law between two statistics"},
      {"resonance", "cyclic rotation of Con or Diff words"},
      {"equivariance", "Phi intertwines the two actions"},
      {"bijection", "apply Phi or its inverse to states from a file"},
  };
  for (auto [name, help] : commands) app.add_subcommand(name, help);
  for (const char* name : {"paper-suite", "suite"}) {
    auto* s = app.add_subcommand(name, "run every acceptance criterion");
    s->add_option("scale", cfg.scale, "small | full")
        ->check(CLI::IsMember({"small", "full"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : orbitkit::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    for (const auto& m : mutations) apply_mutation(cfg.conventions, m);
  } catch (const orbitkit::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return orbitkit::kExitUsage;
  }

  const auto outcome = orbitkit::run_guarded(cfg);
  (outcome.exit_code == orbitkit::kExitUsage ? std::cerr : std::cout)
      << outcome.text;
  return outcome.exit_code;
}

// Config-driven batch front end. Exit codes: 0 clean, 1 property violation
// (or task failure), 2 malformed config.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gifpsi/gifpsi.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string output;
  std::optional<long> seed_override;
  bool parallel = false;
  bool compat_def51 = false;
};

int run_config(const CommonFlags& flags, std::optional<gifpsi::TaskConfig::Type> only) {
  std::ifstream in(flags.config_path);
  if (!in) {
    std::cerr << "error: cannot open config file '" << flags.config_path << "'\n";
    return 2;
  }
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  gifpsi::RunConfig rc;
  try {
    rc = gifpsi::validate_config_text(raw);
  } catch (const gifpsi::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (flags.seed_override) {
    rc.sampler.seed = static_cast<std::uint64_t>(*flags.seed_override);
    rc.echo["sampler"]["seed"] = rc.sampler.seed;
  }
  if (flags.compat_def51) {
    rc.compat_def51 = true;
    rc.echo["compat_def51"] = true;
  }
  if (only) {
    std::vector<gifpsi::TaskConfig> filtered;
    for (auto& t : rc.tasks)
      if (t.type == *only) filtered.push_back(std::move(t));
    rc.tasks = std::move(filtered);
    gifpsi::Json tasks_echo = gifpsi::Json::array();
    for (const auto& t : rc.tasks) {
      gifpsi::Json te = t.params;
      te["type"] = gifpsi::to_string(t.type);
      tasks_echo.push_back(te);
    }
    rc.echo["tasks"] = tasks_echo;
  }

  gifpsi::RunReport report = gifpsi::run(rc, flags.parallel);

  std::string out_path = !flags.output.empty() ? flags.output : rc.output;
  std::string serialized = report.full_json().dump(2);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << out_path << "'\n";
      return 2;
    }
    out << serialized << "\n";
  } else {
    std::cout << serialized << "\n";
  }

  for (const auto& t : report.tasks) {
    std::cerr << (t.violation ? "[violation] " : "[ok]        ") << t.type;
    if (t.errored) std::cerr << " (task failed: " << t.result.value("error", "") << ")";
    std::cerr << "\n";
  }
  return report.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized intuitionistic fuzzy psi-normed linear space toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", flags.config_path, "path to the run config (JSON)")
        ->required();
    cmd->add_option("--output", flags.output, "report output path (overrides config)");
    cmd->add_option("--seed-override", flags.seed_override, "replace the sampler seed");
    cmd->add_flag("--parallel", flags.parallel, "run independent tasks concurrently");
    cmd->add_flag("--compat-def51", flags.compat_def51,
                  "use the alternate epsilon-level continuity form (bounds 1-alpha, 1-beta)");
  };

  struct Sub {
    const char* name;
    const char* help;
    std::optional<gifpsi::TaskConfig::Type> only;
  };
  const Sub subs[] = {
      {"run", "run every task in the config", std::nullopt},
      {"validate-axioms", "run only validate-axioms tasks",
       gifpsi::TaskConfig::Type::ValidateAxioms},
      {"alpha-norm", "run only alpha-norm tasks", gifpsi::TaskConfig::Type::AlphaNorm},
      {"analyze-sequence", "run only analyze-sequence tasks",
       gifpsi::TaskConfig::Type::AnalyzeSequence},
      {"check-continuity", "run only check-continuity tasks",
       gifpsi::TaskConfig::Type::CheckContinuity},
      {"check-compact", "run only check-compact tasks",
       gifpsi::TaskConfig::Type::CheckCompact},
  };
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common(cmd);
    auto only = s.only;
    cmd->callback([&flags, only] { std::exit(run_config(flags, only)); });
  }

  CLI11_PARSE(app, argc, argv);
  return 0;
}

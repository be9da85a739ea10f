#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "liefield/driver/driver.hpp"
#include "liefield/error.hpp"

using namespace liefield;

namespace {

const char* helpFor(const std::string& key) {
  static const std::map<std::string, const char*> help{
      {"p", "timelike count p of the signature"},
      {"q", "spacelike count q of the signature"},
      {"sign", "deformation sign: plus or minus"},
      {"window", "mode window M of the q-deformed operators"},
      {"jet-order", "truncation order N of the shell jets"},
      {"q-value", "numeric q (repeatable); omit for formal t"},
      {"seed", "seed of every random test"},
      {"out", "write the report here instead of stdout"},
      {"max-terms", "term-count guard of the normal-ordering engine"},
      {"convention", "auto, or a triple such as eps=+1,q4=root,y=+1"},
      {"cache-dir", "directory for memoized Casimir elements"},
      {"timings", "include check durations in the report"},
      {"y-value", "value of Y in the shell and mode realizations"},
      {"tests", "number of polynomial tests in the shell suite"},
      {"degree", "degree of the polynomial tests"},
      {"jets", "number of random jets in the shell suite"},
      {"arithmetic", "exact or float shell arithmetic"},
      {"control", "deliberately broken fixture (negative run)"},
      {"candidate", "Casimir candidate for qdeform: default or identity"},
      {"point", "spectral point series:s (repeatable), e.g. continuous:2i"},
  };
  auto it = help.find(key);
  return it == help.end() ? "" : it->second;
}

struct Command {
  CLI::App* app = nullptr;
  std::string suite;
  std::string configFile;
  std::map<std::string, std::vector<std::string>> values;
  std::map<std::string, CLI::Option*> options;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of deformed Poincare algebras, their q-analogues and spectra"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Command>> commands;
  for (const auto& suite : suiteNames()) {
    auto cmd = std::make_unique<Command>();
    cmd->suite = suite;
    std::string name = suite == "spectra" ? suite : "verify-" + suite;
    cmd->app = app.add_subcommand(name, "run the " + suite + " suite");
    cmd->app->add_option("--config", cmd->configFile, "key = value file; flags override it");
    for (const auto& key : settingKeys()) {
      if (key == "timings") {
        cmd->options[key] = cmd->app->add_flag("--timings")->description(helpFor(key));
        continue;
      }
      auto* opt = cmd->app->add_option("--" + key, cmd->values[key], std::string(helpFor(key)));
      if (!isRepeatable(key)) opt->expected(1);
      cmd->options[key] = opt;
    }
    commands.push_back(std::move(cmd));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& cmd : commands) {
    if (!cmd->app->parsed()) continue;
    SuiteConfig cfg;
    cfg.suite = cmd->suite;
    try {
      if (!cmd->configFile.empty()) applyConfigFile(cfg, cmd->configFile);
      cfg.suite = cmd->suite;
      for (const auto& key : settingKeys()) {
        auto* opt = cmd->options[key];
        if (opt->count() == 0) continue;
        if (key == "timings") {
          cfg.timings = true;
          continue;
        }
        if (isRepeatable(key)) clearSetting(cfg, key);
        for (const auto& v : cmd->values[key]) applySetting(cfg, key, v);
      }
    } catch (const Error& e) {
      std::cerr << "configuration error: " << e.what() << "\n";
      return 2;
    }

    SuiteOutcome outcome;
    try {
      outcome = runSuite(cfg);
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 1;
    }
    if (outcome.exitCode == 2) {
      std::cerr << "configuration error: " << outcome.configError << "\n";
      return 2;
    }
    const std::string doc = renderReport(outcome, cfg);
    if (cfg.out.empty()) {
      std::cout << doc;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f || !(f << doc)) {
        std::cerr << "configuration error: cannot write " << cfg.out << "\n";
        return 2;
      }
    }
    std::cerr << cfg.suite << ": " << outcome.report.checks.size() << " checks, " << outcome.report.failures()
              << " not passing\n";
    return outcome.exitCode;
  }
  return 2;
}

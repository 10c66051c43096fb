// trefftz-lab: command-line driver for the plane-wave Trefftz experiments.
//
//   trefftz-lab spectrum           --kappa 1/8,1/16 --p-min 61 --p-max 61
//   trefftz-lab condition          --geometry disk --h 1 --kappa 0.1pi
//   trefftz-lab toeplitz-distance  --geometry square --kappa 2pi
//   trefftz-lab solve              --config run.cfg --precond p1,p5 --side left
//
// Every option may also come from a `key = value` file given with --config;
// options on the command line win over the file.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "trefftz/cli/commands.hpp"
#include "trefftz/cli/config.hpp"
#include "trefftz/kernels.hpp"

namespace {

struct Sub {
  CLI::App* app = nullptr;
  std::string config_path;
  std::map<std::string, std::string> values;
};

void add_options(Sub& sub) {
  // "--h" is the element size, so help is long-form only.
  sub.app->set_help_flag("--help", "print this help and exit");
  sub.app->add_option("--config", sub.config_path, "key = value configuration file");
  for (const auto& key : trefftz::cli::known_keys())
    sub.app->add_option("--" + key, sub.values[key], "see README for '" + key + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace trefftz::cli;

  CLI::App app{"Plane-wave Trefftz element experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "trefftz-lab 1.0");
  bool show_isa = false;
  app.add_flag("--show-isa", show_isa, "print the SIMD kernel set in use");

  std::map<std::string, Sub> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"spectrum", "eigenvalues of the disk mass, cross and stiffness matrices"},
      {"condition", "condition numbers versus p"},
      {"toeplitz-distance", "distance of the polygon mass matrix to Toeplitz and circulant approximants"},
      {"solve", "assemble, precondition and solve the Trefftz system; report L2 errors"},
  };
  for (const auto& [name, help] : commands) {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, help);
    add_options(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (show_isa) std::cerr << "kernels: " << trefftz::kernels::isa_name(trefftz::kernels::active().isa) << '\n';

  for (auto& [name, sub] : subs) {
    if (!sub.app->parsed()) continue;
    try {
      KeyValues kv;
      if (!sub.config_path.empty()) kv = load_config_file(sub.config_path);
      for (const auto& key : known_keys())
        if (sub.app->count("--" + key) > 0) kv[key] = sub.values[key];
      const LabConfig cfg = resolve_config(name, kv);
      return execute(cfg, std::cout, std::cerr);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitAllFailed;
    }
  }
  return kExitConfig;
}

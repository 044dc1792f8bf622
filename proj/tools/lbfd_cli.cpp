// SPDX-License-Identifier: Apache-2.0
//
// lbfd: fourth-order D2Q5 MRT lattice Boltzmann / multi-level finite
// difference solver for 2-D diffusion, with stability and convergence tools.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lbfd/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"D2Q5 MRT-LB / multi-level FD diffusion solver"};
  app.require_subcommand(1);

  std::string config_path;
  const std::vector<std::string> subs = {"run",           "converge", "equiv",
                                         "stability-scan", "tables",   "params"};
  for (const std::string& name : subs) {
    CLI::App* sc = app.add_subcommand(name);
    sc->add_option("--config", config_path, "key=value configuration file");
    sc->allow_extras();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    lbfd::RunConfig cfg;
    CLI::App* sc = app.get_subcommands().front();
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "error: cannot read config file " << config_path << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << is.rdbuf();
      cfg = lbfd::parse_config(ss.str());
    }
    cfg.subcommand = sc->get_name();
    for (const std::string& tok : sc->remaining())
      lbfd::apply_key_value(cfg, tok, "argument");
    lbfd::validate(cfg);
    return lbfd::dispatch(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

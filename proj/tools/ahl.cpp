#include "commands.hpp"

#include "ahl/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ahl;
using namespace ahl::cli;

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebras, cells, the asymptotic ring J and equivariant K-theory examples"};
  app.set_config("--config", "", "Flat key=value file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string cache_dir = ".ahl-cache";
  bool no_cache = false;
  app.add_option("--datum", cfg.datum, "Registered root datum (A1~, A1~ext, A2~, A2~ext)")->capture_default_str();
  app.add_option("--radius", cfg.radius, "Length radius of the truncation")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", cache_dir, "Directory for kltable/v1 files")->envname("AHL_CACHE_DIR")->capture_default_str();
  app.add_flag("--no-cache", no_cache, "Neither read nor write cached tables");
  app.add_option("--out", cfg.out, "Write JSON here instead of stdout");
  app.add_option("--suite", cfg.suite, "verify: j-identities, eqk-traces or theorem-a-regular");
  app.add_option("--example", cfg.example, "GKM example name")->capture_default_str();
  app.add_option("--at", cfg.at, "Specialization point (1, order2, order3)");
  app.add_option("--w", cfg.w, "Element, e.g. s1s0 or s0w1");
  app.add_option("--side", cfg.side, "cells: L, R, LR or all")->capture_default_str();
  app.add_option("--class", cfg.class_name, "trace: effective class name");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random classes")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random samples per property")->check(CLI::PositiveNumber)->capture_default_str();

  auto* kl = app.add_subcommand("kl", "Build or load the KL table and write the cache file");
  auto* cells = app.add_subcommand("cells", "Export cells, a-values and distinguished involutions");
  auto* gamma = app.add_subcommand("gamma", "Export structure constants of J on the certified sub-ball");
  auto* phi = app.add_subcommand("phi", "Image of C_w in J");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* eqk = app.add_subcommand("eqk", "Equivariant K-theory examples");
  auto* demo = eqk->add_subcommand("demo", "Print a GKM example and run its checks");
  eqk->require_subcommand(1);
  auto* trace = app.add_subcommand("trace", "Traces of effective classes");
  for (auto* sub : {kl, cells, gamma, phi, verify, eqk, demo, trace}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (!no_cache) cfg.cache_dir = cache_dir;

  try {
    CommandResult r;
    if (*kl) r = cmd_kl(cfg);
    else if (*cells) r = cmd_cells(cfg);
    else if (*gamma) r = cmd_gamma(cfg);
    else if (*phi) r = cmd_phi(cfg);
    else if (*verify) r = cmd_verify(cfg);
    else if (*demo) r = cmd_eqk_demo(cfg);
    else if (*trace) r = cmd_trace(cfg);
    const std::string text = dump(r.output);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      write_text_file(cfg.out, text);
    }
    if (r.output.contains("certificate_gap")) std::cerr << "not certified: " << r.output["certificate_gap"].get<std::string>() << "\n";
    return r.exit_code;
  } catch (const CertificationError& e) {
    std::cerr << "not certified: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

#pragma once

#include "ahl/io/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace ahl::cli {

struct RunConfig {
  std::string datum = "A1~";
  int radius = -1;  // -1: the command's default
  std::optional<std::filesystem::path> cache_dir;
  std::string out;
  std::string suite;
  std::string example = "pgl2-lowest";
  std::string at;  // empty: every registered point
  std::string w;
  std::string side = "all";
  std::string class_name;
  int jobs = 1;
  unsigned long long seed = 20240601;
  int samples = 20;
};

// Exit codes: 0 ok, 1 a check failed, 2 a requested object is not certified,
// 3 invalid input.
struct CommandResult {
  Json output;
  int exit_code = 0;
};

CommandResult cmd_kl(const RunConfig& cfg);
CommandResult cmd_cells(const RunConfig& cfg);
CommandResult cmd_gamma(const RunConfig& cfg);
CommandResult cmd_phi(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_eqk_demo(const RunConfig& cfg);
CommandResult cmd_trace(const RunConfig& cfg);

// Suites also used directly by the tests.
Json suite_j_identities(const std::string& datum, int radius, int jobs, const std::optional<std::filesystem::path>& cache);
Json suite_eqk_traces(const std::string& example, unsigned long long seed, int samples);
Json suite_theorem_a_regular(int radius);

}  // namespace ahl::cli

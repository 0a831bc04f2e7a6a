#pragma once

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testutil {

inline bool approx_rel(double a, double b, double tol) {
  if (a == b) return true;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= tol * scale;
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

// Runs a shell command, capturing combined stdout/stderr and the exit code.
inline CliResult run_command(const std::string& cmd_line) {
  std::string cmd = cmd_line + " 2>&1";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Runs the CLI binary named by MTDEC_CLI_BIN with the given arguments.
inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("MTDEC_CLI_BIN");
  if (!bin) return {};
  return run_command(std::string(bin) + " " + args);
}

inline std::string data_dir() {
  const char* dir = std::getenv("MTDEC_DATA_DIR");
  return dir ? dir : "data";
}

}  // namespace testutil

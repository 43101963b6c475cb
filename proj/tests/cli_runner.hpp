#pragma once

// Test-side helper: run the overlap-lab binary (path from OVERLAP_LAB_BIN)
// and capture its stdout bytes and exit code.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

inline std::string cli_binary() {
  const char* bin = std::getenv("OVERLAP_LAB_BIN");
  if (!bin || *bin == '\0') {
    throw std::runtime_error("OVERLAP_LAB_BIN is not set; run through ctest");
  }
  return bin;
}

inline CommandResult run_command(const std::string& command_tail,
                                 const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + "\"" + cli_binary() + "\" " + command_tail;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CommandResult res;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil

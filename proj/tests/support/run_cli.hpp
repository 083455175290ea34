#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

// Runs the built CLI binary with the given argument string.
inline CliResult run_cli(const std::string& args) {
#ifndef HBORBIT_CLI_PATH
#error "HBORBIT_CLI_PATH must be defined by the build"
#endif
    const std::string cmd = std::string("\"") + HBORBIT_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult result;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport

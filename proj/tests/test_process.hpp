#pragma once

// Small helper for driving the CLI binary from tests via /bin/sh.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace logdet::testing {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout
    std::string error;   // stderr
};

inline std::filesystem::path unique_temp_path(const std::string& stem) {
    static std::atomic<unsigned> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    return dir / (stem + "-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)));
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs `command` through the shell, capturing stdout/stderr.
inline CommandResult run_command(const std::string& command) {
    const auto out_path = unique_temp_path("cmd-out");
    const auto err_path = unique_temp_path("cmd-err");
    const std::string full =
        command + " > " + out_path.string() + " 2> " + err_path.string();

    CommandResult result;
    const int status = std::system(full.c_str());
    if (status == -1) {
        result.exit_code = -1;
    } else if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = 128;
    }
    result.output = slurp(out_path);
    result.error = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

inline std::string cli_path() {
#ifdef LOGDET_CLI_PATH
    return LOGDET_CLI_PATH;
#else
    return "logdet";
#endif
}

}  // namespace logdet::testing

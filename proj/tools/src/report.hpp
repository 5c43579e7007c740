#pragma once

// Run reports: what a command read, what it found, how long it took.

#include <filesystem>
#include <string>
#include <vector>

#include <thincoalg/io.hpp>

namespace cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

struct InputDigest {
    std::string path;
    std::string sha256;
};

struct RunReport {
    std::string command;
    std::vector<InputDigest> inputs;
    thincoalg::Json result = thincoalg::Json::object();
    double timing_ms = 0;
    int exit_code = kOk;
};

std::string sha256_file(const std::filesystem::path& path);

thincoalg::Json to_json(const RunReport& r);
RunReport report_from_json(const thincoalg::Json& j);

} // namespace cli

#pragma once

// Command implementations. Each fills a RunReport and writes human-readable
// output to `out`; main() handles timing, --json and error mapping.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace cli {

struct Options {
    std::vector<std::string> files;
    bool json = false;
    std::optional<std::size_t> depth;
    std::uint64_t seed = 0;
    std::optional<std::string> expect;  // "thin" | "nonthin"
    bool oracle = false;
    std::optional<std::uint32_t> root;
    std::optional<std::string> sig;
    // gen / bench
    std::string kind = "coalgebra";
    std::optional<std::size_t> size;
    std::optional<double> mean_degree;
    bool thin_shape = false;
    std::optional<std::string> output;
    std::size_t runs = 5;
};

void cmd_validate(const Options& o, RunReport& r, std::ostream& out);
void cmd_check_thin(const Options& o, RunReport& r, std::ostream& out);
void cmd_paths(const Options& o, RunReport& r, std::ostream& out);
void cmd_rank(const Options& o, RunReport& r, std::ostream& out);
void cmd_normalize(const Options& o, RunReport& r, std::ostream& out);
void cmd_eq(const Options& o, RunReport& r, std::ostream& out);
void cmd_unfold(const Options& o, RunReport& r, std::ostream& out);
void cmd_encode(const Options& o, RunReport& r, std::ostream& out);
void cmd_cb_rank(const Options& o, RunReport& r, std::ostream& out);
void cmd_gen(const Options& o, RunReport& r, std::ostream& out);
void cmd_bench(const Options& o, RunReport& r, std::ostream& out);

} // namespace cli

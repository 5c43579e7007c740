// thincoalg: command-line front end. Exit codes: 0 success/positive verdict,
// 1 negative verdict, 2 usage, parse or validation error.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using Command = std::function<void(const cli::Options&, cli::RunReport&, std::ostream&)>;

struct Spec {
    const char* name;
    const char* help;
    Command run;
    bool files = true;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thin coalgebras: thinness, normal forms, ranks and tree encodings"};
    app.require_subcommand(1);
    cli::Options o;

    const std::vector<Spec> specs{
        {"validate", "Parse and validate signature, coalgebra or term files", cli::cmd_validate},
        {"check-thin", "Decide thinness of pointed coalgebras", cli::cmd_check_thin},
        {"paths", "Count finite paths by length and classify infinite paths", cli::cmd_paths},
        {"rank", "Rank of the normal term of a behaviour", cli::cmd_rank},
        {"normalize", "Normal term of a term or thin pointed coalgebra", cli::cmd_normalize},
        {"eq", "Behavioural equality of two terms or pointed coalgebras", cli::cmd_eq},
        {"unfold", "Unfold a term into a finite coalgebra", cli::cmd_unfold},
        {"encode", "Tree encoding of a term, one word per line", cli::cmd_encode},
        {"cb-rank", "Cantor-Bendixson rank (polynomial signatures)", cli::cmd_cb_rank},
        {"gen", "Generate a seeded random coalgebra or term", cli::cmd_gen, false},
        {"bench", "Time the thinness check on a seeded random coalgebra", cli::cmd_bench, false},
    };

    std::map<CLI::App*, const Spec*> by_app;
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        by_app[sub] = &s;
        if (s.files) sub->add_option("files", o.files, "Input files")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", o.json, "Print a JSON run report");
        sub->add_option("--sig", o.sig, "Signature file or stock name, used when an input has none");
        const std::string n = s.name;
        if (n == "check-thin" || n == "paths" || n == "rank" || n == "normalize" || n == "eq" || n == "encode" ||
            n == "cb-rank")
            sub->add_option("--root", o.root, "Root state, overriding the file");
        if (n == "paths" || n == "encode") sub->add_option("--depth", o.depth, "Depth bound");
        if (n == "check-thin") sub->add_option("--expect", o.expect, "Expected verdict: thin or nonthin");
        if (n == "check-thin" || n == "normalize") sub->add_flag("--oracle", o.oracle, "Cross-check with an oracle");
        if (n == "gen" || n == "bench") {
            sub->add_option("--seed", o.seed, "Random seed");
            sub->add_option("--size", o.size, n == "gen" ? "States, or maximum depth for terms" : "States");
            sub->add_option("--mean-degree", o.mean_degree, "Mean transition arity");
        }
        if (n == "gen") {
            sub->add_option("--kind", o.kind, "coalgebra or term");
            sub->add_flag("--thin", o.thin_shape, "Generate a thin coalgebra");
            sub->add_option("-o,--output", o.output, "Output file");
        }
        if (n == "bench") sub->add_option("--runs", o.runs, "Timed runs");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    const Spec* spec = nullptr;
    for (CLI::App* sub : app.get_subcommands()) spec = by_app.at(sub);

    cli::RunReport report;
    report.command = spec->name;
    std::ostringstream human;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        spec->run(o, report, human);
    } catch (const thincoalg::Error& e) {
        report.exit_code = cli::kUsage;
        report.result = {{"error", {{"kind", thincoalg::to_string(e.kind())}, {"message", e.what()}}}};
        std::cerr << "error [" << thincoalg::to_string(e.kind()) << "]: " << e.what() << '\n';
    } catch (const std::exception& e) {
        report.exit_code = cli::kUsage;
        report.result = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cerr << "error: " << e.what() << '\n';
    }
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.json)
        std::cout << cli::to_json(report).dump(2) << '\n';
    else
        std::cout << human.str();
    return report.exit_code;
}

// dyad: two-atom collective dynamics sweeps and self-verification.
//
// Exit codes: 0 success, 1 validation error (bad config/arguments, reported
// as a machine-readable JSON error list on stderr), 2 numerical failure
// (quadrature non-convergence or under-resolved grids, named on stderr).

#include "dyad/selftest.hpp"
#include "dyad/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"two-atom collective dynamics: sweeps and verification"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_override;
    std::string format_override;
    unsigned threads = 0;

    CLI::App* run = app.add_subcommand("run", "evaluate a sweep config");
    run->add_option("config", config_path, "JSON config file")
        ->required();
    run->add_option("--output", output_override,
                    "override the output path from the config");
    run->add_option("--format", format_override,
                    "override the output format (csv|json)");
    run->add_option("--threads", threads,
                    "worker threads (0 = hardware concurrency)");

    std::string level = "quick";
    CLI::App* verify = app.add_subcommand("verify", "run the built-in checks");
    verify->add_option("--level", level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--threads", threads,
                       "accepted for symmetry; checks run serially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (run->parsed()) {
            dyad::RunConfig cfg = dyad::load_run_config(config_path);
            if (!output_override.empty()) cfg.output_path = output_override;
            if (!format_override.empty()) {
                if (format_override == "csv")
                    cfg.format = dyad::OutputFormat::csv;
                else if (format_override == "json")
                    cfg.format = dyad::OutputFormat::json;
                else
                    throw dyad::validation_error(
                        "{\"errors\":[\"--format must be csv or json\"]}");
            }
            const auto t0 = std::chrono::steady_clock::now();
            dyad::run_to_file(cfg, threads, std::cout);
            const auto t1 = std::chrono::steady_clock::now();
            std::cerr << "elapsed "
                      << std::chrono::duration<double>(t1 - t0).count()
                      << " s\n";
            return 0;
        }
        const dyad::VerifyLevel lvl = (level == "full")
                                          ? dyad::VerifyLevel::full
                                          : dyad::VerifyLevel::quick;
        const auto checks = dyad::run_verify(lvl);
        const bool ok = dyad::print_report(checks, std::cout);
        return ok ? 0 : 1;
    } catch (const dyad::validation_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const dyad::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"errors\":[\"" << e.what() << "\"]}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "risbc/experiments.hpp"
#include "risbc/params.hpp"

int main(int argc, char** argv) {
    CLI::App app{"RIS-aided backscatter authentication simulator"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "print experiment names");

    std::string spec_path, out_dir, format_s = "both";
    std::uint64_t seed_override = 0;
    std::size_t trials_override = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool have_seed = false, have_trials = false;

    auto* run_cmd = app.add_subcommand("run", "run one experiment");
    run_cmd->add_option("--spec", spec_path, "experiment spec file")->required();
    run_cmd->add_option("--out", out_dir, "output directory")->required();
    run_cmd->add_option("--format", format_s, "csv|json|both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    run_cmd->add_option("--seed", seed_override, "master seed override")
        ->each([&](const std::string&) { have_seed = true; });
    run_cmd->add_option("--trials", trials_override, "trial count override")
        ->each([&](const std::string&) { have_trials = true; });
    run_cmd->add_option("--threads", threads, "worker thread count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list_cmd->parsed()) {
        for (const auto& n : risbc::experiment_names()) std::puts(n.c_str());
        return 0;
    }

    try {
        risbc::ExperimentSpec spec = risbc::load_spec(spec_path);
        if (have_seed) spec.seed = seed_override;
        if (have_trials) spec.trials = trials_override;
        spec.validate();
        risbc::OutputFormat fmt = format_s == "csv"    ? risbc::OutputFormat::Csv
                                  : format_s == "json" ? risbc::OutputFormat::Json
                                                       : risbc::OutputFormat::Both;
        std::filesystem::create_directories(out_dir);
        const auto t0 = std::chrono::steady_clock::now();
        risbc::run_experiment(spec, out_dir, fmt, threads);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "%s: done in %.2f s -> %s\n", spec.name.c_str(), secs,
                     out_dir.c_str());
        return 0;
    } catch (const risbc::ConfigError& e) {
        std::fprintf(stderr, "spec error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

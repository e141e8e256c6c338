#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "risbc/params.hpp"

namespace risbc {

inline constexpr const char* kVersionString = "risbc 1.0.0";

enum class OutputFormat { Csv, Json, Both };

struct ExperimentSpec {
    std::string name;  // one of experiment_names()
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    std::vector<std::size_t> n_ris_list{0, 20, 50, 100};
    SystemParams params = default_params();
    ScenarioGeometry geom = default_geometry();
    std::map<std::string, std::string> overrides;  // echoed into the summary

    void validate() const;
};

const std::vector<std::string>& experiment_names();

ExperimentSpec load_spec(const std::string& path);
ExperimentSpec parse_spec_text(const std::string& text);

// Runs the named experiment, writes one CSV per curve plus summary.json into
// out_dir, and returns the summary JSON text. Outputs are byte-identical for
// a given (spec, seed) regardless of the thread count.
std::string run_experiment(const ExperimentSpec& spec, const std::string& out_dir,
                           OutputFormat format, unsigned threads);

}  // namespace risbc

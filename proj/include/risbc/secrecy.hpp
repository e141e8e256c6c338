#pragma once

#include <cstdint>
#include <vector>

#include "risbc/params.hpp"

namespace risbc {

struct SnrPair {
    double gamma_r = 0.0;  // linear SNR at the reader
    double gamma_e = 0.0;  // linear SNR at Eve
};

enum class AscScenario { Off, Trusted, MaliciousEavesdrop };

struct AscCurve {
    std::vector<double> gamma_r_bar_db;
    std::vector<double> asc_bits;
    std::size_t n_sim = 0;
};

// max(0, log2(1+gamma_r) - log2(1+gamma_e))
double secrecy_rate(const SnrPair& pair);

// Monte Carlo average secrecy capacity. For each grid point the reader SNR
// is rescaled so its trial average hits the target; the same scale is
// applied to Eve's SNR (the sweep models a source-power knob, so both ends
// move together). Per-trial secrecy rates use the (gamma_r > gamma_e)
// indicator and are averaged over n_sim draws.
AscCurve compute_asc(AscScenario scenario, std::size_t n_ris,
                     const std::vector<double>& gamma_grid_db, std::size_t n_sim,
                     const SystemParams& params, const ScenarioGeometry& geom,
                     std::uint64_t master_seed);

}  // namespace risbc

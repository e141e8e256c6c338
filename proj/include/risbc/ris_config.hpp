#pragma once

#include <cstddef>
#include <vector>

namespace risbc {

enum class RisStrategy {
    Optimal,
    Quantized,
    Random,
    DestructiveJam,
    EavesdropOptimal,
    Off,
};

// Per-element phase configuration. Off is equivalent to N = 0: every
// cascade term is zeroed at evaluation time.
struct RisConfig {
    std::vector<double> phases;  // radians, each in [0, 2*pi)
    RisStrategy strategy = RisStrategy::Off;
    int quantize_bits = 0;  // meaningful for Quantized only

    std::size_t size() const { return phases.size(); }
    bool active() const { return strategy != RisStrategy::Off; }
};

// wraps into [0, 2*pi)
double wrap_phase(double theta);

}  // namespace risbc

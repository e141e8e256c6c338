#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "risbc/params.hpp"

namespace risbc {

enum class Decision { Accept, Reject };

// ON/OFF keying power pattern the reader sends while charging the tag.
struct PowerProfile {
    std::vector<bool> symbols;  // at least one ON
    double symbol_period_s = 10e-3;
};

// Energy-detector output sampled at each symbol boundary.
struct VoltageProfile {
    std::vector<double> samples;  // volts
    double symbol_period_s = 10e-3;
};

inline constexpr double kLoadResistanceOhm = 1000.0;
inline constexpr std::size_t kDefaultProfileSymbols = 16;

// Per-tag pseudo-random ON/OFF pattern derived from the tag id; always has
// at least one ON symbol.
PowerProfile default_power_profile(const std::string& tag_id,
                                   std::size_t symbols = kDefaultProfileSymbols,
                                   double symbol_period_s = 10e-3);

// V_peak = sqrt(eta * P * R_load)
double peak_voltage(double incident_power_w, const SystemParams& params);

// RC step response per symbol: ON charges toward V_peak, OFF decays, both
// with time constant tau; starts from 0 V.
VoltageProfile simulate_profile(const PowerProfile& pp, double incident_power_w,
                                const SystemParams& params);

// Accept iff the largest per-sample deviation is <= epsilon (inclusive).
Decision authenticate_reader(const VoltageProfile& observed, const VoltageProfile& stored,
                             double epsilon_v);

double max_deviation(const VoltageProfile& observed, const VoltageProfile& stored);

struct BackscatterMessage {
    std::string id;
    std::string payload;
};

// One protocol round at the tag: the reader must pass profile verification
// before the tag backscatters anything.
class TagSession {
public:
    TagSession(std::string tag_id, VoltageProfile stored);

    Decision authenticate_reader(const VoltageProfile& observed, double epsilon_v);
    BackscatterMessage backscatter() const;  // throws unless last decision was Accept

private:
    std::string tag_id_;
    VoltageProfile stored_;
    bool accepted_ = false;
};

}  // namespace risbc

#include "risbc/tag.hpp"

#include <cmath>
#include <stdexcept>

#include "risbc/rng.hpp"

namespace risbc {

PowerProfile default_power_profile(const std::string& tag_id, std::size_t symbols,
                                   double symbol_period_s) {
    if (symbols < 1) throw std::invalid_argument("power profile needs at least one symbol");
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the id
    for (unsigned char c : tag_id) h = (h ^ c) * 1099511628211ULL;
    Rng rng(Rng::mix(h, 0));
    PowerProfile pp;
    pp.symbol_period_s = symbol_period_s;
    pp.symbols.resize(symbols);
    bool any_on = false;
    for (std::size_t i = 0; i < symbols; ++i) {
        bool on = rng.uniform() < 0.5;
        pp.symbols[i] = on;
        any_on = any_on || on;
    }
    if (!any_on) pp.symbols[0] = true;
    return pp;
}

double peak_voltage(double incident_power_w, const SystemParams& params) {
    if (incident_power_w < 0.0) throw std::invalid_argument("incident power must be >= 0");
    return std::sqrt(params.rectifier_efficiency * incident_power_w * kLoadResistanceOhm);
}

VoltageProfile simulate_profile(const PowerProfile& pp, double incident_power_w,
                                const SystemParams& params) {
    const double v_peak = peak_voltage(incident_power_w, params);
    const double decay = std::exp(-pp.symbol_period_s / params.rc_time_constant_s);
    VoltageProfile out;
    out.symbol_period_s = pp.symbol_period_s;
    out.samples.reserve(pp.symbols.size());
    double v = 0.0;
    for (bool on : pp.symbols) {
        v = on ? v_peak + (v - v_peak) * decay : v * decay;
        out.samples.push_back(v);
    }
    return out;
}

double max_deviation(const VoltageProfile& observed, const VoltageProfile& stored) {
    if (observed.samples.size() != stored.samples.size() ||
        observed.symbol_period_s != stored.symbol_period_s)
        throw std::invalid_argument("voltage profiles are not comparable");
    double worst = 0.0;
    for (std::size_t i = 0; i < observed.samples.size(); ++i)
        worst = std::max(worst, std::abs(observed.samples[i] - stored.samples[i]));
    return worst;
}

Decision authenticate_reader(const VoltageProfile& observed, const VoltageProfile& stored,
                             double epsilon_v) {
    return max_deviation(observed, stored) <= epsilon_v ? Decision::Accept : Decision::Reject;
}

TagSession::TagSession(std::string tag_id, VoltageProfile stored)
    : tag_id_(std::move(tag_id)), stored_(std::move(stored)) {}

Decision TagSession::authenticate_reader(const VoltageProfile& observed, double epsilon_v) {
    Decision d = risbc::authenticate_reader(observed, stored_, epsilon_v);
    accepted_ = (d == Decision::Accept);
    return d;
}

BackscatterMessage TagSession::backscatter() const {
    if (!accepted_)
        throw std::logic_error("backscatter without a prior reader accept in this round");
    return {tag_id_, "backscatter"};
}

}  // namespace risbc

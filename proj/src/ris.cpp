#include "risbc/ris.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "risbc/rng.hpp"

namespace risbc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_elements(const ChannelState& state) {
    if (state.g_r.empty()) throw std::invalid_argument("RIS strategy requires N >= 1");
}
}  // namespace

double wrap_phase(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

RisConfig off_config() { return RisConfig{{}, RisStrategy::Off, 0}; }

RisConfig optimal_phases(const ChannelState& state, const ScenarioGeometry&) {
    require_elements(state);
    RisConfig cfg;
    cfg.strategy = RisStrategy::Optimal;
    cfg.phases.reserve(state.g_r.size());
    const double ref = std::arg(state.h_rt);
    for (std::size_t n = 0; n < state.g_r.size(); ++n)
        cfg.phases.push_back(wrap_phase(ref - std::arg(state.g_t[n] * state.g_r[n])));
    return cfg;
}

RisConfig eavesdrop_phases(const ChannelState& state, const ScenarioGeometry&) {
    require_elements(state);
    RisConfig cfg;
    cfg.strategy = RisStrategy::EavesdropOptimal;
    cfg.phases.reserve(state.g_t.size());
    const double ref = std::arg(state.h_te);
    for (std::size_t n = 0; n < state.g_t.size(); ++n)
        cfg.phases.push_back(wrap_phase(ref - std::arg(state.g_t[n] * state.g_e[n])));
    return cfg;
}

RisConfig quantize_phases(const RisConfig& config, int bits) {
    if (bits < 1) throw std::invalid_argument("quantize_phases requires bits >= 1");
    const double step = kTwoPi / static_cast<double>(1 << bits);
    RisConfig out = config;
    out.strategy = RisStrategy::Quantized;
    out.quantize_bits = bits;
    for (double& p : out.phases) p = wrap_phase(std::round(p / step) * step);
    return out;
}

RisConfig random_phases(std::size_t n, std::uint64_t rng_seed) {
    if (n < 1) throw std::invalid_argument("random_phases requires n >= 1");
    Rng rng(rng_seed);
    RisConfig cfg;
    cfg.strategy = RisStrategy::Random;
    cfg.phases.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cfg.phases.push_back(rng.uniform() * kTwoPi);
    return cfg;
}

RisConfig destructive_phases(const ChannelState& state, const SystemParams& params,
                             const ScenarioGeometry& geom) {
    require_elements(state);
    const std::size_t n = state.g_r.size();
    const double pl = path_loss_amp(geom.d_tag_ris_m, params.pathloss_exp_ris) *
                      path_loss_amp(geom.d_reader_ris_m, params.pathloss_exp_ris);
    const cplx a = direct_gain(state, params, geom);

    std::vector<cplx> terms(n);
    std::vector<double> mags(n);
    double budget = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        terms[i] = state.g_t[i] * state.g_r[i] * pl;
        mags[i] = std::abs(terms[i]);
        budget += mags[i];
    }

    RisConfig cfg;
    cfg.strategy = RisStrategy::DestructiveJam;
    cfg.phases.assign(n, 0.0);

    if (budget <= std::abs(a)) {
        // anti-phase every term against the direct link: |a+b| = |a| - budget
        const double ref = std::arg(state.h_rt);
        for (std::size_t i = 0; i < n; ++i)
            cfg.phases[i] = wrap_phase(ref + 3.14159265358979323846 - std::arg(terms[i]));
        return cfg;
    }

    // Phasor closing: steer the element phasors, largest first, so their sum
    // lands on -a and the composite gain collapses.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return mags[x] > mags[y]; });

    const cplx target = -a;
    cplx cur{0.0, 0.0};
    double rem = budget;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        const double m = mags[i];
        rem -= m;
        const cplx resid = target - cur;
        const double r = std::abs(resid);
        // achievable residual after this step is [|r-m|, r+m]; steering it to
        // the remaining budget keeps the walk closable and lands the final
        // step exactly on the target (desired = rem = 0 at the last element)
        const double desired = std::clamp(rem, std::abs(r - m), r + m);
        double ang = 0.0;
        if (r > 1e-300) {
            double c = (r * r + m * m - desired * desired) / (2.0 * r * m);
            ang = std::acos(std::clamp(c, -1.0, 1.0));
        }
        const double phi = std::arg(resid) + ang;
        cfg.phases[i] = wrap_phase(phi - std::arg(terms[i]));
        cur += std::polar(m, phi);
    }
    return cfg;
}

}  // namespace risbc

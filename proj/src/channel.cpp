#include "risbc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "risbc/rng.hpp"

namespace risbc {

cplx draw_cn(Rng& rng) {
    // CN(0,1): independent N(0, 1/2) parts
    const double s = 0.70710678118654752440;
    double re = rng.normal() * s;
    double im = rng.normal() * s;
    return {re, im};
}

ChannelState draw_channels(std::uint64_t rng_seed, const SystemParams& params) {
    Rng rng(rng_seed);
    ChannelState st;
    st.h_rt = draw_cn(rng);
    st.h_te = draw_cn(rng);
    st.h_re = draw_cn(rng);
    const std::size_t n = params.ris_elements;
    st.g_r.reserve(n);
    st.g_t.reserve(n);
    st.g_e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) st.g_r.push_back(draw_cn(rng));
    for (std::size_t i = 0; i < n; ++i) st.g_t.push_back(draw_cn(rng));
    for (std::size_t i = 0; i < n; ++i) st.g_e.push_back(draw_cn(rng));
    return st;
}

ChannelState evolve_channels(const ChannelState& state, double rho, std::uint64_t rng_seed) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("rho must be in [0,1]");
    Rng rng(rng_seed);
    const double w = std::sqrt(1.0 - rho * rho);
    auto step = [&](cplx h) { return rho * h + w * draw_cn(rng); };
    ChannelState out;
    out.h_rt = step(state.h_rt);
    out.h_te = step(state.h_te);
    out.h_re = step(state.h_re);
    out.g_r.reserve(state.g_r.size());
    out.g_t.reserve(state.g_t.size());
    out.g_e.reserve(state.g_e.size());
    for (cplx h : state.g_r) out.g_r.push_back(step(h));
    for (cplx h : state.g_t) out.g_t.push_back(step(h));
    for (cplx h : state.g_e) out.g_e.push_back(step(h));
    return out;
}

double path_loss_amp(double distance_m, double chi) { return std::pow(distance_m, -chi); }

namespace {

void check_length(const ChannelState& state, const RisConfig& phases) {
    if (phases.active() && phases.size() != state.g_r.size())
        throw std::invalid_argument("RIS config length does not match channel state");
}

cplx cascade_sum(const std::vector<cplx>& u, const std::vector<cplx>& v,
                 const RisConfig& phases, double pl) {
    if (!phases.active()) return {0.0, 0.0};
    cplx s{0.0, 0.0};
    for (std::size_t n = 0; n < phases.size(); ++n)
        s += u[n] * std::polar(1.0, phases.phases[n]) * v[n];
    return s * pl;
}

}  // namespace

cplx direct_gain(const ChannelState& state, const SystemParams& params,
                 const ScenarioGeometry& geom) {
    return state.h_rt * path_loss_amp(geom.d_tag_reader_m, params.pathloss_exp_direct);
}

cplx cascade_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom) {
    check_length(state, phases);
    const double pl = path_loss_amp(geom.d_tag_ris_m, params.pathloss_exp_ris) *
                      path_loss_amp(geom.d_reader_ris_m, params.pathloss_exp_ris);
    return cascade_sum(state.g_t, state.g_r, phases, pl);
}

cplx one_way_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom) {
    return direct_gain(state, params, geom) + cascade_gain(state, phases, params, geom);
}

cplx tag_eve_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom) {
    check_length(state, phases);
    const double pl = path_loss_amp(geom.d_tag_ris_m, params.pathloss_exp_ris) *
                      path_loss_amp(geom.d_eve_ris_m, params.pathloss_exp_ris);
    return state.h_te * path_loss_amp(geom.d_tag_eve_m, params.pathloss_exp_direct) +
           cascade_sum(state.g_t, state.g_e, phases, pl);
}

cplx reader_eve_gain(const ChannelState& state, const RisConfig& phases,
                     const SystemParams& params, const ScenarioGeometry& geom) {
    check_length(state, phases);
    const double pl = path_loss_amp(geom.d_eve_ris_m, params.pathloss_exp_ris) *
                      path_loss_amp(geom.d_reader_ris_m, params.pathloss_exp_ris);
    return state.h_re * path_loss_amp(geom.d_reader_eve_m, params.pathloss_exp_direct) +
           cascade_sum(state.g_e, state.g_r, phases, pl);
}

SignalSample received_tag(const ChannelState& state, const RisConfig& phases,
                          const SystemParams& params, const ScenarioGeometry& geom) {
    cplx g = one_way_gain(state, phases, params, geom);
    return {std::sqrt(params.source_power_w()) * g, 0.0};
}

SignalSample received_reader(const ChannelState& state, const RisConfig& phases,
                             const SystemParams& params, const ScenarioGeometry& geom,
                             bool include_noise, std::uint64_t rng_seed) {
    const cplx a = direct_gain(state, params, geom);
    const cplx b = cascade_gain(state, phases, params, geom);
    // the four terms of the backscatter expansion, evaluated explicitly
    const cplx four = a * a + a * b + b * a + b * b;
    const cplx ref = (a + b) * (a + b);
    const double denom = std::max(std::abs(ref), 1e-300);
    if (std::abs(four - ref) / denom > 1e-10)
        throw std::logic_error("backscatter term expansion mismatch");
    cplx value = std::sqrt(params.source_power_w()) * four;  // S = 1
    double nvar = 0.0;
    if (include_noise) {
        nvar = params.noise_reader_w();
        Rng rng(rng_seed);
        value += std::sqrt(nvar) * draw_cn(rng);
    }
    return {value, nvar};
}

SignalSample received_eve(const ChannelState& state, const RisConfig& phases,
                          const SystemParams& params, const ScenarioGeometry& geom) {
    const double incident = std::abs(one_way_gain(state, phases, params, geom));
    const cplx g = tag_eve_gain(state, phases, params, geom);
    return {std::sqrt(params.source_power_w()) * incident * g, params.noise_eve_w()};
}

}  // namespace risbc

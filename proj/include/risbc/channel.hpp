#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "risbc/params.hpp"
#include "risbc/ris_config.hpp"

namespace risbc {

using cplx = std::complex<double>;

// Small-scale fading state for every link at one time slot. Gains are
// unit-variance CN(0,1); path loss d^-chi is applied at evaluation time,
// never baked into the draw. One stored value serves both directions of
// each reciprocal link.
struct ChannelState {
    cplx h_rt;                // reader <-> tag direct
    cplx h_te;                // tag <-> Eve direct
    cplx h_re;                // reader <-> Eve direct
    std::vector<cplx> g_r;    // reader <-> RIS, per element
    std::vector<cplx> g_t;    // tag <-> RIS, per element
    std::vector<cplx> g_e;    // RIS <-> Eve, per element
};

struct SignalSample {
    cplx value;
    double noise_var_w = 0.0;
};

ChannelState draw_channels(std::uint64_t rng_seed, const SystemParams& params);

// h' = rho*h + sqrt(1-rho^2)*e, elementwise; preserves Rayleigh marginals.
ChannelState evolve_channels(const ChannelState& state, double rho, std::uint64_t rng_seed);

// amplitude path loss d^-chi
double path_loss_amp(double distance_m, double chi);

// One-way reader<->tag composite gain a + b:
//   a = h_rt * d_RT^-chi1
//   b = sum_n g_t[n] e^{j theta_n} g_r[n] * (d_TTheta * d_RTheta)^-chi2
cplx direct_gain(const ChannelState& state, const SystemParams& params,
                 const ScenarioGeometry& geom);
cplx cascade_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom);
cplx one_way_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom);

// tag -> Eve composite: h_te * d_TE^-chi1 + sum_n g_t e^{j theta} g_e * (d_TTheta*d_ETheta)^-chi2
cplx tag_eve_gain(const ChannelState& state, const RisConfig& phases,
                  const SystemParams& params, const ScenarioGeometry& geom);

// reader -> Eve composite: h_re * d_RE^-chi1 + sum_n g_e e^{j theta} g_r * (d_ETheta*d_RTheta)^-chi2
cplx reader_eve_gain(const ChannelState& state, const RisConfig& phases,
                     const SystemParams& params, const ScenarioGeometry& geom);

// Received signal at the tag: sqrt(P_s) * (a + b); tag noise disregarded.
SignalSample received_tag(const ChannelState& state, const RisConfig& phases,
                          const SystemParams& params, const ScenarioGeometry& geom);

// Backscatter received at the reader: sqrt(P_s) * (a^2 + 2ab + b^2) * S, S = 1.
// The four-term expansion is evaluated explicitly and checked against (a+b)^2.
SignalSample received_reader(const ChannelState& state, const RisConfig& phases,
                             const SystemParams& params, const ScenarioGeometry& geom,
                             bool include_noise, std::uint64_t rng_seed);

// Noise-free composite seen by Eve from the tag's backscatter, scaled by
// sqrt(P_s)*|a+b|; noise_var_w = sigma^2_E.
SignalSample received_eve(const ChannelState& state, const RisConfig& phases,
                          const SystemParams& params, const ScenarioGeometry& geom);

cplx draw_cn(class Rng& rng);  // CN(0,1)

}  // namespace risbc

#pragma once

#include <cstdint>

#include "risbc/channel.hpp"
#include "risbc/ris_config.hpp"

namespace risbc {

// Co-phases every reader<->tag cascade term with the direct link:
// theta_n = -arg(g_t[n]*g_r[n]) + arg(h_rt). Requires N >= 1.
RisConfig optimal_phases(const ChannelState& state, const ScenarioGeometry& geom);

// Rounds each phase to the nearest multiple of 2*pi/2^bits.
RisConfig quantize_phases(const RisConfig& config, int bits);

// Minimizes the one-way gain magnitude |a + b|. When the cascade budget
// sum|t_n| is below |a| this is plain anti-phasing (theta_n = co-phase + pi,
// giving |a| - sum|t_n|); otherwise the element phasors are closed onto -a
// so the composite collapses toward zero. Requires N >= 1.
RisConfig destructive_phases(const ChannelState& state, const SystemParams& params,
                             const ScenarioGeometry& geom);

// Co-phases the tag->RIS->Eve cascade with the tag->Eve direct link.
RisConfig eavesdrop_phases(const ChannelState& state, const ScenarioGeometry& geom);

// i.i.d. uniform phases on [0, 2*pi).
RisConfig random_phases(std::size_t n, std::uint64_t rng_seed);

RisConfig off_config();

}  // namespace risbc

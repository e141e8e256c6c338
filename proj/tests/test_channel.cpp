#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "risbc/channel.hpp"
#include "risbc/ris.hpp"
#include "risbc/rng.hpp"

using namespace risbc;

namespace {

SystemParams unit_params(std::size_t n) {
    SystemParams p = default_params();
    p.source_power_dbm = 30.0;  // 1 W
    p.ris_elements = n;
    return p;
}

ScenarioGeometry unit_geom() {
    ScenarioGeometry g;
    g.d_reader_ris_m = g.d_tag_ris_m = g.d_tag_eve_m = g.d_reader_eve_m = g.d_eve_ris_m =
        g.d_tag_reader_m = 1.0;
    return g;
}

ChannelState ones_state(std::size_t n) {
    ChannelState st;
    st.h_rt = st.h_te = st.h_re = 1.0;
    st.g_r.assign(n, 1.0);
    st.g_t.assign(n, 1.0);
    st.g_e.assign(n, 1.0);
    return st;
}

RisConfig zero_phases(std::size_t n) {
    RisConfig cfg;
    cfg.strategy = RisStrategy::Optimal;
    cfg.phases.assign(n, 0.0);
    return cfg;
}

}  // namespace

TEST_CASE("draw_channels is deterministic and Rayleigh") {
    SystemParams p = default_params();
    p.ris_elements = 4;
    ChannelState a = draw_channels(7, p);
    ChannelState b = draw_channels(7, p);
    CHECK(a.h_rt == b.h_rt);
    CHECK(a.g_r == b.g_r);
    CHECK(a.g_e == b.g_e);

    p.ris_elements = 0;
    ChannelState c = draw_channels(3, p);
    CHECK(c.g_r.empty());
    CHECK(c.g_t.empty());
    CHECK(std::abs(c.h_rt) > 0.0);

    double acc = 0.0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) acc += std::norm(draw_channels(1000 + i, p).h_rt);
    CHECK(acc / trials == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("evolve_channels correlation behaviour") {
    SystemParams p = default_params();
    p.ris_elements = 2;
    ChannelState st = draw_channels(11, p);

    ChannelState same = evolve_channels(st, 1.0, 99);
    CHECK(same.h_rt == st.h_rt);
    CHECK(same.g_t == st.g_t);

    auto sample_corr = [&](double rho) {
        const int n = 100000;
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        for (int i = 0; i < n; ++i) {
            ChannelState s0 = draw_channels(50000 + i, p);
            ChannelState s1 = evolve_channels(s0, rho, 150000 + i);
            sxy += s0.h_rt.real() * s1.h_rt.real();
            sxx += std::norm(std::complex<double>(s0.h_rt.real(), 0.0));
            syy += std::norm(std::complex<double>(s1.h_rt.real(), 0.0));
        }
        return sxy / std::sqrt(sxx * syy);
    };
    CHECK(std::abs(sample_corr(0.0)) < 0.02);
    CHECK(sample_corr(0.99) == doctest::Approx(0.99).epsilon(0.0102));

    CHECK_THROWS(evolve_channels(st, 1.5, 1));
}

TEST_CASE("evolve preserves Rayleigh marginal (KS distance)") {
    SystemParams p = default_params();
    p.ris_elements = 0;
    const int n = 100000;
    std::vector<double> mags;
    mags.reserve(n);
    for (int i = 0; i < n; ++i)
        mags.push_back(std::abs(evolve_channels(draw_channels(i, p), 0.7, 700000 + i).h_rt));
    std::sort(mags.begin(), mags.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double cdf = 1.0 - std::exp(-mags[i] * mags[i]);  // Rayleigh, E|h|^2 = 1
        ks = std::max(ks, std::abs(cdf - (i + 1.0) / n));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.02);
}

TEST_CASE("received_tag examples") {
    ScenarioGeometry g = unit_geom();

    ChannelState st = ones_state(0);
    SignalSample s = received_tag(st, off_config(), unit_params(0), g);
    CHECK(s.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.value.imag() == doctest::Approx(0.0));
    CHECK(s.noise_var_w == 0.0);

    st = ones_state(2);
    s = received_tag(st, zero_phases(2), unit_params(2), g);
    CHECK(s.value.real() == doctest::Approx(3.0).epsilon(1e-12));

    // optimal phases beat any random configuration
    SystemParams p = unit_params(5);
    ChannelState rnd = draw_channels(21, p);
    const double best = std::abs(received_tag(rnd, optimal_phases(rnd, g), p, g).value);
    for (int i = 0; i < 10000; ++i) {
        const double v = std::abs(received_tag(rnd, random_phases(5, 900 + i), p, g).value);
        CHECK(best >= v - 1e-12);
    }

    RisConfig short_cfg = zero_phases(1);
    CHECK_THROWS(received_tag(rnd, short_cfg, p, g));
}

TEST_CASE("received_reader examples and four-term identity") {
    ScenarioGeometry g = unit_geom();

    SignalSample s = received_reader(ones_state(0), off_config(), unit_params(0), g, false, 0);
    CHECK(s.value.real() == doctest::Approx(1.0).epsilon(1e-12));

    s = received_reader(ones_state(2), zero_phases(2), unit_params(2), g, false, 0);
    CHECK(s.value.real() == doctest::Approx(9.0).epsilon(1e-12));

    // 1000 random states across sizes: the expansion must match (a+b)^2;
    // received_reader throws internally if it does not
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = static_cast<std::size_t>(i % 5) * 5;
        SystemParams p = default_params();
        p.ris_elements = n;
        ChannelState st = draw_channels(3000 + i, p);
        RisConfig cfg = n > 0 ? random_phases(n, 4000 + i) : off_config();
        CHECK_NOTHROW(received_reader(st, cfg, p, default_geometry(), false, 0));
    }

    // noisy version is seed-deterministic
    SystemParams p = default_params();
    p.ris_elements = 3;
    ChannelState st = draw_channels(8, p);
    RisConfig cfg = random_phases(3, 9);
    SignalSample n1 = received_reader(st, cfg, p, default_geometry(), true, 77);
    SignalSample n2 = received_reader(st, cfg, p, default_geometry(), true, 77);
    CHECK(n1.value == n2.value);
    CHECK(n1.noise_var_w == doctest::Approx(p.noise_reader_w()));
}

TEST_CASE("received_eve examples") {
    ScenarioGeometry g = unit_geom();
    SystemParams p = unit_params(0);

    ChannelState st = ones_state(0);
    SignalSample s = received_eve(st, off_config(), p, g);
    // composite gain magnitude equals |sqrt(P_s) * a| here (h_te = 1)
    CHECK(std::abs(s.value) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.noise_var_w == doctest::Approx(p.noise_eve_w()));

    // eavesdrop-optimal phases maximize the tag -> Eve composite the RIS controls
    p = unit_params(5);
    st = draw_channels(31, p);
    const double best = std::abs(tag_eve_gain(st, eavesdrop_phases(st, g), p, g));
    for (int i = 0; i < 10000; ++i)
        CHECK(best >= std::abs(tag_eve_gain(st, random_phases(5, 500 + i), p, g)) - 1e-12);

    // dead Eve cascade: tag -> Eve composite collapses to the direct term
    st.g_e.assign(5, 0.0);
    const cplx v1 = tag_eve_gain(st, random_phases(5, 1), p, g);
    const cplx v2 = tag_eve_gain(st, random_phases(5, 2), p, g);
    CHECK(std::abs(v1 - v2) < 1e-12);
    CHECK(std::abs(v1 - st.h_te * path_loss_amp(g.d_tag_eve_m, p.pathloss_exp_direct)) < 1e-12);
}

TEST_CASE("path loss monotonicity and reciprocity") {
    SystemParams p = default_params();
    CHECK(path_loss_amp(2.0, 3.5) < path_loss_amp(1.0, 3.5));
    CHECK(path_loss_amp(1.0, 2.5) == 1.0);

    p.ris_elements = 4;
    ChannelState st = draw_channels(5, p);
    RisConfig cfg = random_phases(4, 6);
    ScenarioGeometry g = default_geometry();
    ScenarioGeometry far = g;
    far.d_tag_reader_m *= 2.0;
    CHECK(std::abs(direct_gain(st, p, far)) < std::abs(direct_gain(st, p, g)));
    far = g;
    far.d_tag_ris_m *= 2.0;
    CHECK(std::abs(cascade_gain(st, cfg, p, far)) < std::abs(cascade_gain(st, cfg, p, g)));

    // reciprocity: one stored gain serves both directions, so swapping the
    // roles of reader and tag (same distances both ways) leaves a+b unchanged
    ScenarioGeometry swapped = g;
    std::swap(swapped.d_tag_ris_m, swapped.d_reader_ris_m);
    ChannelState sw = st;
    std::swap(sw.g_r, sw.g_t);
    CHECK(std::abs(one_way_gain(sw, cfg, p, swapped)) ==
          doctest::Approx(std::abs(one_way_gain(st, cfg, p, g))).epsilon(1e-12));
}

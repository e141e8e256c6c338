#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "risbc/adversary.hpp"

using namespace risbc;

namespace {

const SystemParams kP = default_params();
const ScenarioGeometry kG = default_geometry();

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

TEST_CASE("trials are seed-deterministic and correctly labeled") {
    TrialOutcome a = impersonating_tag_trial(kP, kG, 20, 5, 17);
    TrialOutcome b = impersonating_tag_trial(kP, kG, 20, 5, 17);
    CHECK(a.statistic == b.statistic);
    CHECK(a.decision == b.decision);
    CHECK_FALSE(a.is_legitimate);
    CHECK(a.kind == AttackKind::ImpersonatingTag);

    TrialOutcome l = legit_reader_trial(kP, kG, 20, 5, 17);
    CHECK(l.is_legitimate);
    CHECK_FALSE(l.kind.has_value());

    TrialOutcome t = fake_reader_trial(kP, kG, 20, 5, 17);
    CHECK(t.kind == AttackKind::FakeReader);
    CHECK_FALSE(t.is_legitimate);

    CHECK_THROWS(relay_mitm_injection_trial(AttackKind::Jamming, kP, kG, 20, 5, 17));
}

TEST_CASE("attacker statistics sit below legitimate ones") {
    const std::size_t trials = 10000;
    double legit_dev = 0.0, attack_dev = 0.0;
    double legit_ratio = 0.0, attack_ratio = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        legit_dev += legit_tag_trial(kP, kG, 100, 1, i).statistic;
        attack_dev += fake_reader_trial(kP, kG, 100, 2, i).statistic;
        legit_ratio += legit_reader_trial(kP, kG, 100, 3, i).statistic;
        attack_ratio += impersonating_tag_trial(kP, kG, 100, 4, i).statistic;
    }
    CHECK(attack_dev / trials > legit_dev / trials);     // tag side: bigger deviation
    CHECK(legit_ratio / trials > attack_ratio / trials); // reader side: ratio gap
}

TEST_CASE("relay, MITM and injection separate strongly at N = 100") {
    // uncalibrated attacks should be near-ideally detectable for all three
    const std::size_t trials = 4000;
    for (AttackKind kind : {AttackKind::Relay, AttackKind::Mitm, AttackKind::Injection}) {
        std::size_t rejected = 0;
        for (std::size_t i = 0; i < trials; ++i)
            rejected +=
                relay_mitm_injection_trial(kind, kP, kG, 100, 6, i).decision == Decision::Reject;
        CHECK(rejected > trials * 9 / 10);
    }
    // two-hop and one-hop formulas genuinely differ
    TrialOutcome relay = relay_mitm_injection_trial(AttackKind::Relay, kP, kG, 20, 7, 3);
    TrialOutcome inj = relay_mitm_injection_trial(AttackKind::Injection, kP, kG, 20, 7, 3);
    TrialOutcome mitm = relay_mitm_injection_trial(AttackKind::Mitm, kP, kG, 20, 7, 3);
    CHECK(relay.statistic != inj.statistic);
    CHECK(relay.statistic != mitm.statistic);
}

TEST_CASE("jamming trial") {
    CHECK(jamming_trial(JammingScenario::None, kP, kG, 100, 1, 0) == 0.0);

    const std::size_t trials = 2000;
    std::vector<double> mal20(trials), mal100(trials), ext0(trials), ext100(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        mal20[i] = jamming_trial(JammingScenario::MaliciousRis, kP, kG, 20, 8, i);
        mal100[i] = jamming_trial(JammingScenario::MaliciousRis, kP, kG, 100, 8, i);
        ext0[i] = jamming_trial(JammingScenario::External, kP, kG, 0, 9, i);
        ext100[i] = jamming_trial(JammingScenario::External, kP, kG, 100, 9, i);
    }
    // malicious RIS: deeper nulls with more elements
    CHECK(median(mal100) < median(mal20));
    CHECK(median(mal20) < 0.0);
    // external jammer: the RIS mitigates, so the loss is smaller with N = 100
    CHECK(median(ext100) > median(ext0));
    CHECK(median(ext0) < 0.0);
}

TEST_CASE("malicious RIS eavesdropping SNRs") {
    const std::size_t trials = 10000;
    double ge_csi = 0.0, ge_blind = 0.0, ge_trusted = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        ge_csi += malicious_ris_eavesdrop_trial(true, kP, kG, 100, 11, i).gamma_e;
        ge_blind += malicious_ris_eavesdrop_trial(false, kP, kG, 100, 11, i).gamma_e;
    }
    // trusted-optimal phases as the reference: reuse the blind generator with
    // N = 0 to get Eve's direct-only floor, then compare orderings
    CHECK(ge_csi / trials > ge_blind / trials);

    SnrPair p = malicious_ris_eavesdrop_trial(true, kP, kG, 50, 12, 7);
    CHECK(p.gamma_r >= 0.0);
    CHECK(p.gamma_e >= 0.0);

    // dead Eve cascade: gamma_e falls back to the direct-link value for any
    // phase strategy (checked via N = 0 vs a state whose g_e is zeroed in
    // the channel tests; here we check independence of knows_csi)
    SnrPair n0a = malicious_ris_eavesdrop_trial(true, kP, kG, 0, 13, 5);
    SnrPair n0b = malicious_ris_eavesdrop_trial(false, kP, kG, 0, 13, 5);
    CHECK(n0a.gamma_e == n0b.gamma_e);
}

TEST_CASE("epsilon derivation and amplitude moments") {
    const double eps0 = derived_epsilon_v(kP, kG, 0);
    const double eps100 = derived_epsilon_v(kP, kG, 100);
    CHECK(eps0 > 0.0);
    CHECK(eps100 > eps0);  // more elements, higher legit peak

    SystemParams p = kP;
    p.comparator_threshold_v = 0.123;
    CHECK(derived_epsilon_v(p, kG, 100) == 0.123);

    // closed-form moments agree with Monte Carlo
    const std::size_t trials = 100000;
    double m1 = 0.0, m2 = 0.0;
    SystemParams pn = kP;
    pn.ris_elements = 20;
    const double plc = path_loss_amp(kG.d_tag_ris_m, kP.pathloss_exp_ris) *
                       path_loss_amp(kG.d_reader_ris_m, kP.pathloss_exp_ris);
    for (std::size_t i = 0; i < trials; ++i) {
        ChannelState st = draw_channels(700000 + i, pn);
        double a = std::abs(direct_gain(st, pn, kG));
        for (std::size_t n = 0; n < 20; ++n)
            a += std::abs(st.g_t[n]) * std::abs(st.g_r[n]) * plc;
        m1 += a;
        m2 += a * a;
    }
    CHECK(m1 / trials == doctest::Approx(mean_cophased_amp(kP, kG, 20)).epsilon(0.01));
    CHECK(m2 / trials == doctest::Approx(mean_sq_cophased_amp(kP, kG, 20)).epsilon(0.02));
}

#pragma once

#include <cstdint>
#include <optional>

#include "risbc/channel.hpp"
#include "risbc/secrecy.hpp"
#include "risbc/tag.hpp"

namespace risbc {

enum class AttackKind {
    FakeReader,
    ImpersonatingTag,
    Replay,
    Relay,
    Mitm,
    Injection,
    Jamming,
    MaliciousRisJam,
    MaliciousRisEavesdrop,
};

struct TrialOutcome {
    double statistic = 0.0;  // reader side: RSS ratio; tag side: worst voltage deviation
    bool is_legitimate = false;
    Decision decision = Decision::Reject;
    std::optional<AttackKind> kind;  // empty for legitimate trials
};

enum class JammingScenario { None, External, MaliciousRis };

// Tag-side comparator threshold: the configured value, or 5% of the
// analytic legitimate peak voltage when left at 0.
double derived_epsilon_v(const SystemParams& params, const ScenarioGeometry& geom,
                         std::size_t n_ris);

// E[A] and E[A^2] of the co-phased one-way amplitude, in closed form.
double mean_cophased_amp(const SystemParams& params, const ScenarioGeometry& geom,
                         std::size_t n_ris);
double mean_sq_cophased_amp(const SystemParams& params, const ScenarioGeometry& geom,
                            std::size_t n_ris);

// One authentication round with the genuine reader and tag. Slot-0 channels
// give the registered baseline (co-phased RIS, noise-free); slot-j channels
// are the correlated evolution. ris_hijacked switches the slot-j RIS to the
// eavesdropper-aimed configuration (incoherent for the reader-tag path).
TrialOutcome legit_reader_trial(const SystemParams& params, const ScenarioGeometry& geom,
                                std::size_t n_ris, std::uint64_t master, std::uint64_t trial,
                                bool ris_hijacked = false);
TrialOutcome legit_tag_trial(const SystemParams& params, const ScenarioGeometry& geom,
                             std::size_t n_ris, std::uint64_t master, std::uint64_t trial);

// Eve replays the charging sequence from her own position; clone substitutes
// the legitimate reader's channels and transmit power (indistinguishability
// anchor).
TrialOutcome fake_reader_trial(const SystemParams& params, const ScenarioGeometry& geom,
                               std::size_t n_ris, std::uint64_t master, std::uint64_t trial,
                               bool clone = false);

// Eve backscatters the valid ID from her position, transmit power calibrated
// to the average legitimate level.
TrialOutcome impersonating_tag_trial(const SystemParams& params, const ScenarioGeometry& geom,
                                     std::size_t n_ris, std::uint64_t master,
                                     std::uint64_t trial, bool clone = false);

// Relay, MITM and injection share a pipeline but use distinct composite
// gains: Injection drives the reader over Eve's reader-side link alone
// (calibrated one-hop); Relay chains tag->Eve and Eve->reader (calibrated
// two-hop); Mitm is the two-hop path at raw source-power parity, without
// calibration. Replay reduces to impersonation.
TrialOutcome relay_mitm_injection_trial(AttackKind kind, const SystemParams& params,
                                        const ScenarioGeometry& geom, std::size_t n_ris,
                                        std::uint64_t master, std::uint64_t trial,
                                        bool clone = false);

// Reader SNR change in dB versus the clean trusted-optimal baseline.
double jamming_trial(JammingScenario scenario, const SystemParams& params,
                     const ScenarioGeometry& geom, std::size_t n_ris, std::uint64_t master,
                     std::uint64_t trial);

SnrPair malicious_ris_eavesdrop_trial(bool knows_csi, const SystemParams& params,
                                      const ScenarioGeometry& geom, std::size_t n_ris,
                                      std::uint64_t master, std::uint64_t trial);

}  // namespace risbc

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "risbc/channel.hpp"
#include "risbc/tag.hpp"

namespace risbc {

struct TagRecord {
    std::string tag_id;
    double rss_baseline_w = 0.0;  // > 0
    PowerProfile power_profile;
};

// Keyed by tag id; ids are unique, lookups of absent ids are explicit.
class ReaderDatabase {
public:
    void register_tag(const std::string& id, double rss0_w, PowerProfile pp);
    const TagRecord* find(const std::string& id) const;  // null when absent
    std::size_t size() const { return records_.size(); }

    std::string export_table() const;  // one line per record: id rss_w bits
    static ReaderDatabase import_table(const std::string& text);

private:
    std::map<std::string, TagRecord> records_;
};

// Noise-free RSS = P_s * |a^2 + 2ab + b^2|^2 = P_s * |a+b|^4.
double rss_noise_free(const ChannelState& state, const RisConfig& phases,
                      const SystemParams& params, const ScenarioGeometry& geom);

// Measured RSS: mean over rss_avg_symbols noisy samples of |y_R|^2, minus
// the known noise power, floored just above zero.
double measure_rss(const ChannelState& state, const RisConfig& phases,
                   const SystemParams& params, const ScenarioGeometry& geom,
                   std::uint64_t noise_seed);

// Averaged noisy measurement around an externally supplied true RSS value;
// shared by legitimate and adversarial trial generators.
double measure_rss_around(double true_rss_w, const SystemParams& params,
                          std::uint64_t noise_seed);

// min/max branch of the ratio statistic; scale-invariant, in (0, 1].
double rss_ratio(double baseline_w, double observed_w);

Decision authenticate_tag(const ReaderDatabase& db, const std::string& claimed_id,
                          double observed_rss_w, double threshold);

}  // namespace risbc

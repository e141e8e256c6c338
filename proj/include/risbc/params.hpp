#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace risbc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario-wide constants. Immutable after construction; shared read-only
// across Monte Carlo workers.
struct SystemParams {
    double source_power_dbm = 1.0;        // P_s
    double noise_power_reader_dbm = -30;  // sigma^2_R
    double noise_power_eve_dbm = -20;     // sigma^2_E
    double spectral_efficiency_bps_hz = 1.0;  // carried, unused by any metric
    double pathloss_exp_direct = 3.5;     // chi_1
    double pathloss_exp_ris = 2.5;        // chi_2
    std::size_t ris_elements = 100;       // N, 0 = "No RIS"
    double rc_time_constant_s = 1e-3;     // tau
    double rectifier_efficiency = 0.5;
    double comparator_threshold_v = 0.0;  // epsilon; 0 = derive 5% of legit V_peak
    double rss_ratio_threshold = 0.9;
    double temporal_correlation = 0.99;   // rho between slot 0 and slot j
    std::size_t rss_avg_symbols = 64;     // symbols averaged per RSS measurement

    void validate() const;
    double source_power_w() const;
    double noise_reader_w() const;
    double noise_eve_w() const;
};

struct ScenarioGeometry {
    double d_reader_ris_m = 1.0;
    double d_tag_ris_m = 1.0;
    double d_tag_eve_m = 1.0;
    double d_reader_eve_m = 1.0;
    double d_eve_ris_m = 0.8;
    double d_tag_reader_m = 2.0;

    void validate() const;
};

SystemParams default_params();
ScenarioGeometry default_geometry();

double dbm_to_watts(double dbm);

// Flat key/value UTF-8 config text, keys exactly matching field names.
// Unknown keys and malformed lines raise ConfigError naming the offender.
void apply_config_line(SystemParams& p, ScenarioGeometry& g,
                       const std::string& key, const std::string& value);
void parse_config_text(const std::string& text, SystemParams& p, ScenarioGeometry& g);

}  // namespace risbc

#include "risbc/params.hpp"

#include <cmath>
#include <sstream>

namespace risbc {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double SystemParams::source_power_w() const { return dbm_to_watts(source_power_dbm); }
double SystemParams::noise_reader_w() const { return dbm_to_watts(noise_power_reader_dbm); }
double SystemParams::noise_eve_w() const { return dbm_to_watts(noise_power_eve_dbm); }

void SystemParams::validate() const {
    if (pathloss_exp_direct < 2.0 || pathloss_exp_direct > 6.0)
        throw ConfigError("pathloss_exp_direct must be in [2,6]");
    if (pathloss_exp_ris < 2.0 || pathloss_exp_ris > 6.0)
        throw ConfigError("pathloss_exp_ris must be in [2,6]");
    if (rectifier_efficiency <= 0.0 || rectifier_efficiency > 1.0)
        throw ConfigError("rectifier_efficiency must be in (0,1]");
    if (rc_time_constant_s <= 0.0) throw ConfigError("rc_time_constant_s must be > 0");
    if (comparator_threshold_v < 0.0) throw ConfigError("comparator_threshold_v must be >= 0");
    if (rss_ratio_threshold <= 0.0 || rss_ratio_threshold > 1.0)
        throw ConfigError("rss_ratio_threshold must be in (0,1]");
    if (temporal_correlation < 0.0 || temporal_correlation > 1.0)
        throw ConfigError("temporal_correlation must be in [0,1]");
    if (rss_avg_symbols < 1) throw ConfigError("rss_avg_symbols must be >= 1");
}

void ScenarioGeometry::validate() const {
    auto chk = [](double d, const char* name) {
        if (!(d > 0.0)) throw ConfigError(std::string(name) + " must be > 0");
    };
    chk(d_reader_ris_m, "d_reader_ris_m");
    chk(d_tag_ris_m, "d_tag_ris_m");
    chk(d_tag_eve_m, "d_tag_eve_m");
    chk(d_reader_eve_m, "d_reader_eve_m");
    chk(d_eve_ris_m, "d_eve_ris_m");
    chk(d_tag_reader_m, "d_tag_reader_m");
}

SystemParams default_params() { return SystemParams{}; }
ScenarioGeometry default_geometry() { return ScenarioGeometry{}; }

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for key '" + key + "': " + value);
    }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    double v = parse_double(key, value);
    if (v < 0.0 || v != std::floor(v))
        throw ConfigError("key '" + key + "' requires a non-negative integer");
    return static_cast<std::size_t>(v);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void apply_config_line(SystemParams& p, ScenarioGeometry& g,
                       const std::string& key, const std::string& value) {
    if (key == "source_power_dbm") p.source_power_dbm = parse_double(key, value);
    else if (key == "noise_power_reader_dbm") p.noise_power_reader_dbm = parse_double(key, value);
    else if (key == "noise_power_eve_dbm") p.noise_power_eve_dbm = parse_double(key, value);
    else if (key == "spectral_efficiency_bps_hz") p.spectral_efficiency_bps_hz = parse_double(key, value);
    else if (key == "pathloss_exp_direct") p.pathloss_exp_direct = parse_double(key, value);
    else if (key == "pathloss_exp_ris") p.pathloss_exp_ris = parse_double(key, value);
    else if (key == "ris_elements") p.ris_elements = parse_count(key, value);
    else if (key == "rc_time_constant_s") p.rc_time_constant_s = parse_double(key, value);
    else if (key == "rectifier_efficiency") p.rectifier_efficiency = parse_double(key, value);
    else if (key == "comparator_threshold_v") p.comparator_threshold_v = parse_double(key, value);
    else if (key == "rss_ratio_threshold") p.rss_ratio_threshold = parse_double(key, value);
    else if (key == "temporal_correlation") p.temporal_correlation = parse_double(key, value);
    else if (key == "rss_avg_symbols") p.rss_avg_symbols = parse_count(key, value);
    else if (key == "d_reader_ris_m") g.d_reader_ris_m = parse_double(key, value);
    else if (key == "d_tag_ris_m") g.d_tag_ris_m = parse_double(key, value);
    else if (key == "d_tag_eve_m") g.d_tag_eve_m = parse_double(key, value);
    else if (key == "d_reader_eve_m") g.d_reader_eve_m = parse_double(key, value);
    else if (key == "d_eve_ris_m") g.d_eve_ris_m = parse_double(key, value);
    else if (key == "d_tag_reader_m") g.d_tag_reader_m = parse_double(key, value);
    else throw ConfigError("unknown config key: " + key);
}

void parse_config_text(const std::string& text, SystemParams& p, ScenarioGeometry& g) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        apply_config_line(p, g, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    p.validate();
    g.validate();
}

}  // namespace risbc

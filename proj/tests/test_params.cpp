#include <doctest.h>

#include "risbc/params.hpp"

using namespace risbc;

TEST_CASE("default parameters match the documented scenario") {
    SystemParams p = default_params();
    CHECK(p.source_power_dbm == 1.0);
    CHECK(p.pathloss_exp_direct == 3.5);
    CHECK(p.pathloss_exp_ris == 2.5);
    CHECK(p.noise_power_eve_dbm == -20.0);
    CHECK(p.noise_power_reader_dbm == -30.0);
    CHECK(p.spectral_efficiency_bps_hz == 1.0);
    CHECK(p.temporal_correlation == 0.99);
    CHECK_NOTHROW(p.validate());
    // pure: identical across calls
    SystemParams q = default_params();
    CHECK(q.source_power_dbm == p.source_power_dbm);
    CHECK(q.ris_elements == p.ris_elements);
}

TEST_CASE("default geometry") {
    ScenarioGeometry g = default_geometry();
    CHECK(g.d_eve_ris_m == 0.8);
    CHECK(g.d_tag_ris_m == 1.0);
    CHECK(g.d_reader_ris_m == 1.0);
    CHECK(g.d_tag_eve_m == 1.0);
    CHECK(g.d_reader_eve_m == 1.0);
    CHECK(g.d_tag_reader_m == 2.0);
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("dbm conversion") {
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dbm_to_watts(0.0) == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(dbm_to_watts(-30.0) == doctest::Approx(1e-6).epsilon(1e-12));
    for (double p = -40.0; p <= 40.0; p += 3.7) {
        CHECK(dbm_to_watts(p + 10.0) / dbm_to_watts(p) == doctest::Approx(10.0).epsilon(1e-12));
        CHECK(dbm_to_watts(p + 1.0) > dbm_to_watts(p));
    }
}

TEST_CASE("config parsing is strict") {
    SystemParams p = default_params();
    ScenarioGeometry g = default_geometry();
    parse_config_text("source_power_dbm = 5\n# comment\nd_eve_ris_m = 0.5\n", p, g);
    CHECK(p.source_power_dbm == 5.0);
    CHECK(g.d_eve_ris_m == 0.5);

    CHECK_THROWS_AS(parse_config_text("no_such_key = 1\n", p, g), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("foo = 1\n", p, g),
                         doctest::Contains("foo"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("source_power_dbm = abc\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("just a line\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("ris_elements = -3\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("d_tag_reader_m = 0\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("pathloss_exp_direct = 1.0\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("rectifier_efficiency = 0\n", p, g), ConfigError);
    CHECK_THROWS_AS(parse_config_text("temporal_correlation = 1.5\n", p, g), ConfigError);
}

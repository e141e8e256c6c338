#include "risbc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "risbc/adversary.hpp"
#include "risbc/roc.hpp"
#include "risbc/rng.hpp"
#include "risbc/secrecy.hpp"

namespace risbc {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kRoleLegitReader = 1;
constexpr std::uint64_t kRoleLegitTag = 2;
constexpr std::uint64_t kRoleFakeReader = 3;
constexpr std::uint64_t kRoleImpersonate = 4;
constexpr std::uint64_t kRoleHijackedLegit = 5;
constexpr std::uint64_t kRoleAsc = 6;

std::uint64_t curve_master(std::uint64_t seed, std::uint64_t role, std::uint64_t index) {
    return Rng::mix(Rng::mix(seed, role), index);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Deterministic parallel trial map: results are keyed by trial index, so the
// output is independent of the worker count and scheduling.
template <typename F>
auto parallel_trials(std::size_t trials, unsigned threads, F fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(trials);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
    if (workers == 1) {
        for (std::size_t i = 0; i < trials; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

struct CsvFile {
    std::string name;
    std::string content;
};

void write_outputs(const std::string& out_dir, const std::vector<CsvFile>& csvs,
                   const std::string& summary, OutputFormat format) {
    auto write = [&](const std::string& name, const std::string& content) {
        const std::string path = out_dir + "/" + name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write output file: " + path);
        f << content;
        if (!f) throw std::runtime_error("write failed: " + path);
    };
    if (format != OutputFormat::Json)
        for (const auto& c : csvs) write(c.name, c.content);
    if (format != OutputFormat::Csv) write("summary.json", summary);
}

CsvFile roc_csv(const std::string& name, std::size_t n, const RocCurve& curve) {
    std::ostringstream out;
    out << "threshold,tpr,fpr\n";
    for (std::size_t i = 0; i < curve.thresholds.size(); ++i)
        out << g17(curve.thresholds[i]) << ',' << g17(curve.tpr[i]) << ','
            << g17(curve.fpr[i]) << '\n';
    return {name + "_N" + std::to_string(n) + ".csv", out.str()};
}

json config_json(const SystemParams& p, const ScenarioGeometry& g) {
    json cfg;
    cfg["source_power_dbm"] = p.source_power_dbm;
    cfg["noise_power_reader_dbm"] = p.noise_power_reader_dbm;
    cfg["noise_power_eve_dbm"] = p.noise_power_eve_dbm;
    cfg["spectral_efficiency_bps_hz"] = p.spectral_efficiency_bps_hz;
    cfg["pathloss_exp_direct"] = p.pathloss_exp_direct;
    cfg["pathloss_exp_ris"] = p.pathloss_exp_ris;
    cfg["ris_elements"] = p.ris_elements;
    cfg["rc_time_constant_s"] = p.rc_time_constant_s;
    cfg["rectifier_efficiency"] = p.rectifier_efficiency;
    cfg["comparator_threshold_v"] = p.comparator_threshold_v;
    cfg["rss_ratio_threshold"] = p.rss_ratio_threshold;
    cfg["temporal_correlation"] = p.temporal_correlation;
    cfg["rss_avg_symbols"] = p.rss_avg_symbols;
    json geo;
    geo["d_reader_ris_m"] = g.d_reader_ris_m;
    geo["d_tag_ris_m"] = g.d_tag_ris_m;
    geo["d_tag_eve_m"] = g.d_tag_eve_m;
    geo["d_reader_eve_m"] = g.d_reader_eve_m;
    geo["d_eve_ris_m"] = g.d_eve_ris_m;
    geo["d_tag_reader_m"] = g.d_tag_reader_m;
    json out;
    out["params"] = std::move(cfg);
    out["geometry"] = std::move(geo);
    return out;
}

std::vector<double> stats_of(const std::vector<TrialOutcome>& v) {
    std::vector<double> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i].statistic;
    return s;
}

// --- experiment pipelines ---

void run_roc_tag(const ExperimentSpec& spec, unsigned threads, std::vector<CsvFile>& csvs,
                 json& results) {
    for (std::size_t n : spec.n_ris_list) {
        auto legit = parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return legit_tag_trial(spec.params, spec.geom, n,
                                   curve_master(spec.seed, kRoleLegitTag, n), i);
        });
        auto attack = parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return fake_reader_trial(spec.params, spec.geom, n,
                                     curve_master(spec.seed, kRoleFakeReader, n), i);
        });
        RocCurve curve =
            build_roc(stats_of(legit), stats_of(attack), ScoreDirection::LowerIsAuthentic);
        csvs.push_back(roc_csv(spec.name, n, curve));
        json r;
        r["n_ris"] = n;
        r["auc"] = curve.auc;
        results["curves"].push_back(std::move(r));
    }
}

void run_roc_reader(const ExperimentSpec& spec, unsigned threads, std::vector<CsvFile>& csvs,
                    json& results, bool hijacked_ris) {
    for (std::size_t n : spec.n_ris_list) {
        auto legit = parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return legit_reader_trial(spec.params, spec.geom, n,
                                      curve_master(spec.seed,
                                                   hijacked_ris ? kRoleHijackedLegit
                                                                : kRoleLegitReader,
                                                   n),
                                      i, hijacked_ris && n > 0);
        });
        auto attack = parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return impersonating_tag_trial(spec.params, spec.geom, n,
                                           curve_master(spec.seed, kRoleImpersonate, n), i);
        });
        RocCurve curve =
            build_roc(stats_of(legit), stats_of(attack), ScoreDirection::HigherIsAuthentic);
        csvs.push_back(roc_csv(spec.name, n, curve));
        json r;
        r["n_ris"] = n;
        r["auc"] = curve.auc;
        results["curves"].push_back(std::move(r));
    }
}

void run_distance_table(const ExperimentSpec& spec, unsigned threads,
                        std::vector<CsvFile>& csvs, json& results) {
    const std::vector<double> distances{2.0, 3.0, 4.0, 5.0, 6.0};
    for (std::size_t n : spec.n_ris_list) {
        std::ostringstream out;
        out << "d_tag_reader_m,accuracy\n";
        json col;
        for (std::size_t di = 0; di < distances.size(); ++di) {
            ScenarioGeometry g = spec.geom;
            g.d_tag_reader_m = distances[di];
            const std::uint64_t master =
                Rng::mix(curve_master(spec.seed, kRoleLegitReader, n), di);
            auto legit = parallel_trials(spec.trials, threads, [&](std::size_t i) {
                return legit_reader_trial(spec.params, g, n, master, i);
            });
            std::size_t accepted = 0;
            for (const auto& t : legit) accepted += t.decision == Decision::Accept;
            const double acc = static_cast<double>(accepted) / static_cast<double>(spec.trials);
            out << g17(distances[di]) << ',' << g17(acc) << '\n';
            json r;
            r["n_ris"] = n;
            r["d_tag_reader_m"] = distances[di];
            r["accuracy"] = acc;
            col.push_back(std::move(r));
        }
        csvs.push_back({spec.name + "_N" + std::to_string(n) + ".csv", out.str()});
        results["rows"].push_back(std::move(col));
    }
}

// Mixed-stream accuracy: the first round(density * trials) trial slots carry
// attacks, the rest are legitimate; accuracy = correct decisions / trials.
double mixed_accuracy(const std::vector<Decision>& legit, const std::vector<Decision>& attack,
                      double density) {
    const std::size_t trials = legit.size();
    const std::size_t n_att =
        std::min(trials, static_cast<std::size_t>(std::llround(density * trials)));
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n_att; ++i) correct += attack[i] == Decision::Reject;
    for (std::size_t i = n_att; i < trials; ++i) correct += legit[i] == Decision::Accept;
    return static_cast<double>(correct) / static_cast<double>(trials);
}

std::vector<Decision> decisions_of(const std::vector<TrialOutcome>& v) {
    std::vector<Decision> d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i].decision;
    return d;
}

void run_attacker_density(const ExperimentSpec& spec, unsigned threads,
                          std::vector<CsvFile>& csvs, json& results) {
    const std::vector<double> densities{0.1, 0.3, 0.5, 0.7, 0.9};
    for (std::size_t n : spec.n_ris_list) {
        auto legit = decisions_of(parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return legit_reader_trial(spec.params, spec.geom, n,
                                      curve_master(spec.seed, kRoleLegitReader, n), i);
        }));
        auto attack = decisions_of(parallel_trials(spec.trials, threads, [&](std::size_t i) {
            return impersonating_tag_trial(spec.params, spec.geom, n,
                                           curve_master(spec.seed, kRoleImpersonate, n), i);
        }));
        std::ostringstream out;
        out << "attacker_density,accuracy\n";
        for (double d : densities) {
            const double acc = mixed_accuracy(legit, attack, d);
            out << g17(d) << ',' << g17(acc) << '\n';
            json r;
            r["n_ris"] = n;
            r["attacker_density"] = d;
            r["accuracy"] = acc;
            results["rows"].push_back(std::move(r));
        }
        csvs.push_back({spec.name + "_N" + std::to_string(n) + ".csv", out.str()});
    }
}

void run_tag_power_density(const ExperimentSpec& spec, unsigned threads,
                           std::vector<CsvFile>& csvs, json& results) {
    const std::vector<double> powers_dbm{-5.0, 0.0, 1.0, 5.0};
    const std::vector<double> densities{0.1, 0.3, 0.5, 0.7, 0.9};
    for (std::size_t n : spec.n_ris_list) {
        std::ostringstream out;
        out << "source_power_dbm,attacker_density,accuracy\n";
        for (std::size_t pi = 0; pi < powers_dbm.size(); ++pi) {
            SystemParams p = spec.params;
            p.source_power_dbm = powers_dbm[pi];
            const std::uint64_t ml =
                Rng::mix(curve_master(spec.seed, kRoleLegitTag, n), pi);
            const std::uint64_t ma =
                Rng::mix(curve_master(spec.seed, kRoleFakeReader, n), pi);
            auto legit = decisions_of(parallel_trials(spec.trials, threads, [&](std::size_t i) {
                return legit_tag_trial(p, spec.geom, n, ml, i);
            }));
            auto attack = decisions_of(parallel_trials(spec.trials, threads, [&](std::size_t i) {
                return fake_reader_trial(p, spec.geom, n, ma, i);
            }));
            for (double d : densities) {
                const double acc = mixed_accuracy(legit, attack, d);
                out << g17(powers_dbm[pi]) << ',' << g17(d) << ',' << g17(acc) << '\n';
                json r;
                r["n_ris"] = n;
                r["source_power_dbm"] = powers_dbm[pi];
                r["attacker_density"] = d;
                r["accuracy"] = acc;
                results["rows"].push_back(std::move(r));
            }
        }
        csvs.push_back({spec.name + "_N" + std::to_string(n) + ".csv", out.str()});
    }
}

void run_asc(const ExperimentSpec& spec, unsigned /*threads*/, std::vector<CsvFile>& csvs,
             json& results) {
    const std::vector<double> grid{0.0, 4.0, 8.0, 12.0, 16.0, 20.0};
    auto emit = [&](const char* label, AscScenario sc, std::size_t n) {
        AscCurve c = compute_asc(sc, n, grid, spec.trials, spec.params, spec.geom,
                                 curve_master(spec.seed, kRoleAsc, n * 4 +
                                                             static_cast<std::size_t>(sc)));
        std::ostringstream out;
        out << "gamma_r_bar_db,asc_bits,n_sim\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
            out << g17(c.gamma_r_bar_db[i]) << ',' << g17(c.asc_bits[i]) << ','
                << c.n_sim << '\n';
        csvs.push_back({spec.name + "_" + label + "_N" + std::to_string(sc == AscScenario::Off ? 0 : n) + ".csv",
                        out.str()});
        json r;
        r["scenario"] = label;
        r["n_ris"] = sc == AscScenario::Off ? 0 : n;
        r["asc_bits"] = c.asc_bits;
        results["curves"].push_back(std::move(r));
    };
    results["gamma_r_bar_db"] = grid;
    emit("off", AscScenario::Off, 0);
    for (std::size_t n : spec.n_ris_list) {
        if (n == 0) continue;
        emit("trusted", AscScenario::Trusted, n);
        emit("malicious", AscScenario::MaliciousEavesdrop, n);
    }
}

}  // namespace

void ExperimentSpec::validate() const {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw ConfigError("unknown experiment name: " + (name.empty() ? "<missing>" : name));
    if (trials < 100) throw ConfigError("trials must be >= 100");
    if (n_ris_list.empty()) throw ConfigError("n_ris_list must be nonempty");
    params.validate();
    geom.validate();
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{
        "roc-tag",        "tag-power-density", "roc-reader", "attacker-density",
        "distance-table", "asc",               "roc-malicious-ris",
    };
    return names;
}

ExperimentSpec parse_spec_text(const std::string& text) {
    ExperimentSpec spec;
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
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "name") {
            spec.name = value;
        } else if (key == "trials") {
            try {
                spec.trials = std::stoull(value);
            } catch (const std::exception&) {
                throw ConfigError("invalid value for key 'trials': " + value);
            }
        } else if (key == "seed") {
            try {
                spec.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ConfigError("invalid value for key 'seed': " + value);
            }
        } else if (key == "n_ris_list") {
            spec.n_ris_list.clear();
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) {
                try {
                    spec.n_ris_list.push_back(std::stoull(trim(item)));
                } catch (const std::exception&) {
                    throw ConfigError("invalid value in key 'n_ris_list': " + item);
                }
            }
        } else {
            apply_config_line(spec.params, spec.geom, key, value);
            spec.overrides[key] = value;
        }
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_spec(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_spec_text(buf.str());
}

std::string run_experiment(const ExperimentSpec& spec, const std::string& out_dir,
                           OutputFormat format, unsigned threads) {
    spec.validate();
    std::vector<CsvFile> csvs;
    json results;

    if (spec.name == "roc-tag") {
        run_roc_tag(spec, threads, csvs, results);
    } else if (spec.name == "roc-reader") {
        run_roc_reader(spec, threads, csvs, results, false);
    } else if (spec.name == "roc-malicious-ris") {
        run_roc_reader(spec, threads, csvs, results, true);
    } else if (spec.name == "distance-table") {
        results["metric_definition"] =
            "fraction of legitimate trials accepted at the default ratio threshold, "
            "no attackers present";
        run_distance_table(spec, threads, csvs, results);
    } else if (spec.name == "attacker-density") {
        results["metric_definition"] =
            "overall accuracy at the default ratio threshold over a mixed trial stream; "
            "attacker_density is the fraction of attack trials";
        run_attacker_density(spec, threads, csvs, results);
    } else if (spec.name == "tag-power-density") {
        results["metric_definition"] =
            "overall accuracy of the tag-side voltage-profile check over a mixed trial "
            "stream; attacker_density is the fraction of attack trials";
        run_tag_power_density(spec, threads, csvs, results);
    } else if (spec.name == "asc") {
        run_asc(spec, threads, csvs, results);
    }

    json summary;
    summary["experiment"] = spec.name;
    summary["version"] = kVersionString;
    summary["seed"] = spec.seed;
    summary["trials"] = spec.trials;
    summary["n_ris_list"] = spec.n_ris_list;
    summary["config"] = config_json(spec.params, spec.geom);
    summary["overrides"] = spec.overrides;
    summary["results"] = std::move(results);
    const std::string text = summary.dump(2) + "\n";
    write_outputs(out_dir, csvs, text, format);
    return text;
}

}  // namespace risbc

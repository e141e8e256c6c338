#include "risbc/reader.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "risbc/rng.hpp"

namespace risbc {

void ReaderDatabase::register_tag(const std::string& id, double rss0_w, PowerProfile pp) {
    if (rss0_w <= 0.0) throw std::invalid_argument("rss baseline must be > 0");
    if (pp.symbols.empty()) throw std::invalid_argument("power profile must be nonempty");
    bool any_on = false;
    for (bool b : pp.symbols) any_on = any_on || b;
    if (!any_on) throw std::invalid_argument("all-OFF power profile cannot charge the tag");
    auto [it, inserted] = records_.try_emplace(id, TagRecord{id, rss0_w, std::move(pp)});
    (void)it;
    if (!inserted) throw std::invalid_argument("duplicate tag id: " + id);
}

const TagRecord* ReaderDatabase::find(const std::string& id) const {
    auto it = records_.find(id);
    return it == records_.end() ? nullptr : &it->second;
}

std::string ReaderDatabase::export_table() const {
    std::ostringstream out;
    for (const auto& [id, rec] : records_) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", rec.rss_baseline_w);
        out << id << '\t' << buf << '\t';
        for (bool b : rec.power_profile.symbols) out << (b ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

ReaderDatabase ReaderDatabase::import_table(const std::string& text) {
    ReaderDatabase db;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string id, rss_s, bits;
        if (!(ls >> id >> rss_s >> bits))
            throw std::invalid_argument("malformed database line: " + line);
        PowerProfile pp;
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("malformed profile bits: " + bits);
            pp.symbols.push_back(c == '1');
        }
        db.register_tag(id, std::stod(rss_s), std::move(pp));
    }
    return db;
}

double rss_noise_free(const ChannelState& state, const RisConfig& phases,
                      const SystemParams& params, const ScenarioGeometry& geom) {
    const double amp = std::abs(one_way_gain(state, phases, params, geom));
    return params.source_power_w() * amp * amp * amp * amp;
}

double measure_rss_around(double true_rss_w, const SystemParams& params,
                          std::uint64_t noise_seed) {
    if (true_rss_w < 0.0) throw std::invalid_argument("true RSS must be >= 0");
    const double s2 = params.noise_reader_w();
    Rng rng(noise_seed);
    const double amp = std::sqrt(true_rss_w);
    double acc = 0.0;
    for (std::size_t k = 0; k < params.rss_avg_symbols; ++k) {
        cplx y = cplx{amp, 0.0} + std::sqrt(s2) * draw_cn(rng);
        acc += std::norm(y);
    }
    return std::max(acc / static_cast<double>(params.rss_avg_symbols) - s2, 1e-300);
}

double measure_rss(const ChannelState& state, const RisConfig& phases,
                   const SystemParams& params, const ScenarioGeometry& geom,
                   std::uint64_t noise_seed) {
    return measure_rss_around(rss_noise_free(state, phases, params, geom), params, noise_seed);
}

double rss_ratio(double baseline_w, double observed_w) {
    if (baseline_w <= 0.0 || observed_w <= 0.0)
        throw std::invalid_argument("rss_ratio requires positive inputs");
    return baseline_w > observed_w ? observed_w / baseline_w : baseline_w / observed_w;
}

Decision authenticate_tag(const ReaderDatabase& db, const std::string& claimed_id,
                          double observed_rss_w, double threshold) {
    if (threshold <= 0.0 || threshold > 1.0)
        throw std::invalid_argument("threshold must be in (0,1]");
    const TagRecord* rec = db.find(claimed_id);
    if (rec == nullptr) return Decision::Reject;
    return rss_ratio(rec->rss_baseline_w, observed_rss_w) >= threshold ? Decision::Accept
                                                                       : Decision::Reject;
}

}  // namespace risbc

#include "risbc/roc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace risbc {

RocCurve build_roc(const std::vector<double>& legit_stats,
                   const std::vector<double>& attack_stats, ScoreDirection direction) {
    if (legit_stats.empty() || attack_stats.empty())
        throw std::invalid_argument("build_roc requires nonempty score streams");

    // Work in a frame where larger score = more authentic.
    const double sign = direction == ScoreDirection::HigherIsAuthentic ? 1.0 : -1.0;
    std::vector<double> legit(legit_stats), attack(attack_stats);
    for (double& v : legit) v *= sign;
    for (double& v : attack) v *= sign;
    std::sort(legit.begin(), legit.end());
    std::sort(attack.begin(), attack.end());

    std::vector<double> values;
    values.reserve(legit.size() + attack.size());
    values.insert(values.end(), legit.begin(), legit.end());
    values.insert(values.end(), attack.begin(), attack.end());
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const double nl = static_cast<double>(legit.size());
    const double na = static_cast<double>(attack.size());
    const double inf = std::numeric_limits<double>::infinity();

    RocCurve curve;
    curve.thresholds.reserve(values.size() + 2);
    curve.tpr.reserve(values.size() + 2);
    curve.fpr.reserve(values.size() + 2);

    auto push = [&](double thr, double tpr, double fpr) {
        curve.thresholds.push_back(sign * thr);
        curve.tpr.push_back(tpr);
        curve.fpr.push_back(fpr);
    };

    push(inf, 0.0, 0.0);
    for (double v : values) {
        // accept iff score >= v (inclusive on the authentic side)
        double tp = static_cast<double>(legit.end() - std::lower_bound(legit.begin(), legit.end(), v));
        double fp = static_cast<double>(attack.end() - std::lower_bound(attack.begin(), attack.end(), v));
        push(v, tp / nl, fp / na);
    }
    push(-inf, 1.0, 1.0);

    double auc = 0.0;
    for (std::size_t i = 1; i < curve.fpr.size(); ++i)
        auc += (curve.fpr[i] - curve.fpr[i - 1]) * (curve.tpr[i] + curve.tpr[i - 1]) * 0.5;
    curve.auc = auc;
    return curve;
}

double rate_at_far(const RocCurve& curve, double target_far) {
    if (target_far < 0.0 || target_far > 1.0)
        throw std::invalid_argument("target FAR must be in [0,1]");
    double exact = -1.0;
    for (std::size_t i = 0; i < curve.fpr.size(); ++i)
        if (curve.fpr[i] == target_far) exact = std::max(exact, curve.tpr[i]);
    if (exact >= 0.0) return exact;
    for (std::size_t i = 1; i < curve.fpr.size(); ++i) {
        if (curve.fpr[i - 1] < target_far && target_far < curve.fpr[i]) {
            const double w = (target_far - curve.fpr[i - 1]) / (curve.fpr[i] - curve.fpr[i - 1]);
            return curve.tpr[i - 1] + w * (curve.tpr[i] - curve.tpr[i - 1]);
        }
    }
    return 1.0;  // target beyond the last point
}

}  // namespace risbc

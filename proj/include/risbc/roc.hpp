#pragma once

#include <vector>

namespace risbc {

enum class ScoreDirection { HigherIsAuthentic, LowerIsAuthentic };

struct RocCurve {
    std::vector<double> thresholds;
    std::vector<double> tpr;  // authentication rate
    std::vector<double> fpr;  // false acceptance rate
    double auc = 0.0;
};

// Exact empirical ROC: thresholds are the distinct pooled statistic values
// plus +/-inf sentinels; comparisons are inclusive on the authentic side.
RocCurve build_roc(const std::vector<double>& legit_stats,
                   const std::vector<double>& attack_stats, ScoreDirection direction);

// Linear interpolation of tpr at the requested fpr.
double rate_at_far(const RocCurve& curve, double target_far);

}  // namespace risbc

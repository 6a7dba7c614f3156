// Constant (point-index) SSRT estimators from observed session data: the
// crude mean method, the Logan 1994 integration method, and the cluster
// weighted method.
#pragma once

#include "ssrt/racesim.hpp"

namespace ssrt {

struct ConstantSsrtReport {
    double crude_ms = 0.0;
    double logan1994_ms = 0.0;
    double weighted_ms = 0.0;
    double ssrt_a_ms = 0.0;
    double ssrt_b_ms = 0.0;
    double w_a = 0.0;
    double p_inhibit = 0.0;
    double mean_ssd_ms = 0.0;
};

// mean(go RTs) - mean(stop-trial SSDs).
double ssrt_crude(const SstDataset& d);

// Q_GORT(1 - P(inhibit)) - mean(SSD), empirical quantile by linear
// interpolation between order statistics. Undefined when the observed
// inhibition proportion is 0 or 1.
double ssrt_logan1994(const SstDataset& d);

// Logan estimator per cluster view combined as w_a*SSRT_A + (1-w_a)*SSRT_B.
// By default each cluster quantile uses that cluster's own go trials;
// `all_go_quantile` switches to the session-wide go distribution.
ConstantSsrtReport ssrt_weighted(const SstDataset& d, const ClusterPartition& p,
                                 bool all_go_quantile = false);

} // namespace ssrt

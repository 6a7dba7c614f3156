#include "ssrt/indices.hpp"

#include <stdexcept>

#include "ssrt/numerics.hpp"

namespace ssrt {

namespace {

double mean_ssd(const SstDataset& d) {
    const auto ssds = d.stop_ssds();
    if (ssds.empty()) throw std::domain_error("constant SSRT: dataset has no stop trials");
    return mean_of(ssds);
}

double logan_from(const std::vector<double>& go_rts, double p_inh, double mean_ssd_ms) {
    if (go_rts.empty()) throw std::domain_error("ssrt_logan1994: no go trials");
    if (!(p_inh > 0.0 && p_inh < 1.0))
        throw std::domain_error("ssrt_logan1994: inhibition proportion at 0 or 1, quantile undefined");
    return empirical_quantile(go_rts, 1.0 - p_inh) - mean_ssd_ms;
}

} // namespace

double ssrt_crude(const SstDataset& d) {
    const auto rts = d.go_rts();
    if (rts.empty()) throw std::domain_error("ssrt_crude: no go trials");
    return mean_of(rts) - mean_ssd(d);
}

double ssrt_logan1994(const SstDataset& d) {
    return logan_from(d.go_rts(), d.p_inhibit(), mean_ssd(d));
}

ConstantSsrtReport ssrt_weighted(const SstDataset& d, const ClusterPartition& p,
                                 bool all_go_quantile) {
    const ClusterViews views = extract_views(d, p);

    auto cluster_logan = [&](const SstDataset& view) {
        const auto rts = all_go_quantile ? d.go_rts() : view.go_rts();
        return logan_from(rts, view.p_inhibit(), mean_ssd(view));
    };

    ConstantSsrtReport r;
    r.w_a = p.w_a;
    r.p_inhibit = d.p_inhibit();
    r.mean_ssd_ms = mean_ssd(d);
    r.crude_ms = ssrt_crude(d);
    r.logan1994_ms = ssrt_logan1994(d);
    // Degenerate weights skip the empty cluster entirely.
    r.ssrt_a_ms = p.stop_a.empty() ? 0.0 : cluster_logan(views.type_a);
    r.ssrt_b_ms = p.stop_b.empty() ? 0.0 : cluster_logan(views.type_b);
    r.weighted_ms = r.w_a * r.ssrt_a_ms + (1.0 - r.w_a) * r.ssrt_b_ms;
    return r;
}

} // namespace ssrt

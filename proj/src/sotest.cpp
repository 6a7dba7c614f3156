#include "ssrt/sotest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ssrt/numerics.hpp"

namespace ssrt {

std::string alternative_name(Alternative a) {
    switch (a) {
        case Alternative::two_sided: return "two-sided";
        case Alternative::greater: return "greater";
        case Alternative::less: return "less";
    }
    return "?";
}

Alternative parse_alternative(const std::string& name) {
    if (name == "two-sided" || name == "two.sided" || name == "unequal")
        return Alternative::two_sided;
    if (name == "greater") return Alternative::greater;
    if (name == "less") return Alternative::less;
    throw std::invalid_argument("unknown alternative: " + name);
}

double kolmogorov_p_value(double d, std::size_t n, std::size_t m, Alternative alternative) {
    const double nm = static_cast<double>(n) * static_cast<double>(m) /
                      static_cast<double>(n + m);
    const double t = std::sqrt(nm) * d;
    if (t <= 0.0) return 1.0;
    if (alternative != Alternative::two_sided) return std::min(1.0, std::exp(-2.0 * t * t));
    double p = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double term = 2.0 * std::exp(-2.0 * static_cast<double>(i) *
                                           static_cast<double>(i) * t * t);
        p += (i % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> x, std::span<const double> y,
                       Alternative alternative) {
    if (x.empty() || y.empty())
        throw std::domain_error("ks_two_sample: samples must be non-empty");

    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());

    // Walk the pooled order statistics tracking Fx - Fy; ties advance both
    // ECDFs before the difference is inspected (right-continuous convention).
    const double nx = static_cast<double>(xs.size());
    const double ny = static_cast<double>(ys.size());
    std::size_t i = 0, j = 0;
    double diff = 0.0, d_plus = 0.0, d_minus = 0.0;
    while (i < xs.size() || j < ys.size()) {
        double v;
        if (j >= ys.size() || (i < xs.size() && xs[i] <= ys[j])) v = xs[i];
        else v = ys[j];
        while (i < xs.size() && xs[i] == v) { diff += 1.0 / nx; ++i; }
        while (j < ys.size() && ys[j] == v) { diff -= 1.0 / ny; ++j; }
        d_plus = std::max(d_plus, diff);
        d_minus = std::max(d_minus, -diff);
    }

    KsResult r;
    r.alternative = alternative;
    r.n = xs.size();
    r.m = ys.size();
    switch (alternative) {
        case Alternative::two_sided: r.statistic = std::max(d_plus, d_minus); break;
        case Alternative::greater: r.statistic = d_plus; break;
        case Alternative::less: r.statistic = d_minus; break;
    }
    r.p_value = kolmogorov_p_value(r.statistic, r.n, r.m, alternative);
    return r;
}

double pspdt_critical_value(double alpha, int n, int m, bool paper_coefficient) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("pspdt: alpha outside (0,1)");
    const double c = paper_coefficient ? std::sqrt(-0.5 * std::log(0.5))
                                       : std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c * std::sqrt(1.0 / static_cast<double>(n) + 1.0 / static_cast<double>(m));
}

namespace {

double averaged_ks(const Distribution& d1, const Distribution& d2, const PspdtConfig& cfg,
                   const Rng& base, std::uint64_t stream_offset, std::vector<double>* per_k) {
    double sum = 0.0;
    for (int k = 0; k < cfg.K; ++k) {
        Rng rng = base.split(stream_offset + static_cast<std::uint64_t>(k));
        const auto sx = dist_sample(d1, static_cast<std::size_t>(cfg.n), rng);
        const auto sy = dist_sample(d2, static_cast<std::size_t>(cfg.m), rng);
        const double d = ks_two_sample(sx, sy, cfg.alternative).statistic;
        if (per_k) per_k->push_back(d);
        sum += d;
    }
    return sum / static_cast<double>(cfg.K);
}

} // namespace

PspdtResult pspdt(const Distribution& dist1, const Distribution& dist2,
                  const PspdtConfig& cfg) {
    if (cfg.K < 1) throw std::domain_error("pspdt: K must be >= 1");
    if (cfg.n < 2 || cfg.m < 2) throw std::domain_error("pspdt: n and m must be >= 2");

    PspdtResult r;
    r.K = cfg.K;
    r.n = cfg.n;
    r.m = cfg.m;
    r.alpha = cfg.alpha;
    r.alternative = cfg.alternative;
    r.critical_value = pspdt_critical_value(cfg.alpha, cfg.n, cfg.m,
                                            cfg.paper_critical_coefficient);

    const Rng base(cfg.seed);
    r.d_bar = averaged_ks(dist1, dist2, cfg, base, 0, &r.per_k);
    r.reject = r.d_bar > r.critical_value;

    // Null reference: both samples drawn from dist1.
    if (cfg.n_null_reps > 0) {
        int exceed = 0;
        for (int rep = 0; rep < cfg.n_null_reps; ++rep) {
            const std::uint64_t offset =
                1000003ULL * (static_cast<std::uint64_t>(rep) + 1);
            const double d_null = averaged_ks(dist1, dist1, cfg, base, offset, nullptr);
            if (d_null >= r.d_bar) ++exceed;
        }
        r.mc_p_value = (1.0 + exceed) / (1.0 + static_cast<double>(cfg.n_null_reps));
    } else {
        r.mc_p_value = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

PairedTResult paired_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("paired_t_test: length mismatch");
    if (a.size() < 2) throw std::domain_error("paired_t_test: need at least two pairs");

    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];

    PairedTResult r;
    r.n = d.size();
    r.mean_diff = mean_of(d);
    const double var = variance_of(d);
    if (var <= 0.0) {
        r.p_defined = false;
        r.p_value = std::numeric_limits<double>::quiet_NaN();
        r.t_stat = std::numeric_limits<double>::quiet_NaN();
        r.ci_lo = r.ci_hi = r.mean_diff;
        return r;
    }
    const double df = static_cast<double>(r.n - 1);
    const double se = std::sqrt(var / static_cast<double>(r.n));
    r.t_stat = r.mean_diff / se;
    r.p_value = student_t_two_sided_p(r.t_stat, df);
    const double tcrit = student_t_975_quantile(df);
    r.ci_lo = r.mean_diff - tcrit * se;
    r.ci_hi = r.mean_diff + tcrit * se;
    return r;
}

} // namespace ssrt

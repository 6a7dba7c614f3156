#include "ssrt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssrt/quadrature.hpp"

namespace ssrt {

double prob_successful_inhibition(const ExGaussianParams& go, const ExGaussianParams& stop,
                                  double ssd_ms) {
    go.validate();
    stop.validate();
    // Integrate over the stop finishing time u (SSRT axis); the ExG left tail
    // is Gaussian so 12 sigma covers it.
    const double lo = stop.mu - 12.0 * stop.sigma;
    const double hi = stop.mu + 12.0 * stop.sigma + 120.0 * stop.tau;
    const auto integrand = [&](double u) {
        return exg_survival(go, u + ssd_ms) * exg_pdf(stop, u);
    };
    return std::clamp(integrate(integrand, lo, hi), 0.0, 1.0);
}

double srrt_density(const ExGaussianParams& go, const ExGaussianParams& stop, double ssd_ms,
                    double t) {
    const double p_si = prob_successful_inhibition(go, stop, ssd_ms);
    if (p_si >= 1.0) throw NumericalError("srrt_density: response probability is zero");
    return exg_pdf(go, t) * exg_survival(stop, t - ssd_ms) / (1.0 - p_si);
}

double colonius_cdf(const ExGaussianParams& go, const ExGaussianParams& stop, double t_d,
                    double t) {
    if (!(t > 0.0 && t_d > 0.0))
        throw std::domain_error("colonius_cdf: t and t_d must be positive");
    const double f_go = exg_pdf(go, t + t_d);
    if (f_go <= 0.0)
        throw NumericalError("colonius_cdf: go density vanishes at t + t_d, ratio undefined");
    const double p_si = prob_successful_inhibition(go, stop, t_d);
    const double f_srrt = srrt_density(go, stop, t_d, t + t_d);
    const double value = 1.0 - (1.0 - p_si) * (f_srrt / f_go);
    return std::clamp(value, 0.0, 1.0);
}

double colonius_mixture_cdf(const ColoniusClusterInputs& a, const ColoniusClusterInputs& b,
                            double w_a, double t) {
    if (!(w_a >= 0.0 && w_a <= 1.0))
        throw std::domain_error("colonius_mixture_cdf: w_a outside [0,1]");
    auto cluster_term = [&](const ColoniusClusterInputs& c) {
        const double f_go = exg_pdf(c.go, t + c.t_d);
        if (f_go <= 0.0)
            throw NumericalError("colonius_mixture_cdf: go density vanishes, ratio undefined");
        const double p_si = prob_successful_inhibition(c.go, c.stop, c.t_d);
        return (1.0 - p_si) * srrt_density(c.go, c.stop, c.t_d, t + c.t_d) / f_go;
    };
    if (!(t > 0.0 && a.t_d > 0.0 && b.t_d > 0.0))
        throw std::domain_error("colonius_mixture_cdf: t and delays must be positive");
    // Degenerate weights skip the dropped cluster entirely.
    const double term_a = w_a > 0.0 ? cluster_term(a) : 0.0;
    const double term_b = w_a < 1.0 ? cluster_term(b) : 0.0;
    return std::clamp(1.0 - w_a * term_a - (1.0 - w_a) * term_b, 0.0, 1.0);
}

WeightSweep weight_sweep(const std::vector<SubjectClusterSummary>& cohort,
                         const WeightSweepConfig& config) {
    if (cohort.empty()) throw std::domain_error("weight_sweep: empty cohort");
    if (config.grid_points < 2) throw std::domain_error("weight_sweep: need >= 2 grid points");

    const double n = static_cast<double>(cohort.size());
    double mean_ea = 0.0, mean_eb = 0.0, mean_es = 0.0;
    double mean_sq_diff = 0.0;       // avg (E_A - E_B)^2
    double mean_var_diff_ab = 0.0;   // avg (Var_A - Var_B)
    double mean_var_diff_bs = 0.0;   // avg (Var_B - Var_S)
    for (const SubjectClusterSummary& s : cohort) {
        const double ea = s.theta_a.mu + s.theta_a.tau;
        const double eb = s.theta_b.mu + s.theta_b.tau;
        const double es = s.theta_s.mu + s.theta_s.tau;
        const double va = exg_shape(s.theta_a).variance;
        const double vb = exg_shape(s.theta_b).variance;
        const double vs = exg_shape(s.theta_s).variance;
        mean_ea += ea;
        mean_eb += eb;
        mean_es += es;
        mean_sq_diff += (ea - eb) * (ea - eb);
        mean_var_diff_ab += va - vb;
        mean_var_diff_bs += vb - vs;
    }
    mean_ea /= n;
    mean_eb /= n;
    mean_es /= n;
    mean_sq_diff /= n;
    mean_var_diff_ab /= n;
    mean_var_diff_bs /= n;

    WeightSweep sweep;
    sweep.mean_slope = mean_ea - mean_eb;
    sweep.mean_intercept = mean_eb - mean_es;
    sweep.var_a = -mean_sq_diff;
    sweep.var_b = mean_sq_diff + mean_var_diff_ab;
    sweep.var_c = mean_var_diff_bs;
    if (mean_sq_diff > 0.0)
        sweep.argmax_var_w = std::clamp(sweep.var_b / (2.0 * mean_sq_diff), 0.0, 1.0);
    else
        // Degenerate parabola: delta_var is affine and maximized at an end.
        sweep.argmax_var_w = sweep.var_b > 0.0 ? 1.0 : 0.0;

    // Cohort-mean triples feed the optional distribution-level statistics.
    ExGaussianParams bar_s{}, bar_a{}, bar_b{};
    bar_s = bar_a = bar_b = ExGaussianParams{0.0, 0.0, 0.0};
    for (const SubjectClusterSummary& s : cohort) {
        bar_s.mu += s.theta_s.mu / n; bar_s.sigma += s.theta_s.sigma / n; bar_s.tau += s.theta_s.tau / n;
        bar_a.mu += s.theta_a.mu / n; bar_a.sigma += s.theta_a.sigma / n; bar_a.tau += s.theta_a.tau / n;
        bar_b.mu += s.theta_b.mu / n; bar_b.sigma += s.theta_b.sigma / n; bar_b.tau += s.theta_b.tau / n;
    }

    if (config.with_pspdt)
        sweep.pspdt_cutoff = pspdt_critical_value(config.pspdt.alpha, config.pspdt.n,
                                                  config.pspdt.m,
                                                  config.pspdt.paper_critical_coefficient);

    sweep.points.reserve(static_cast<std::size_t>(config.grid_points));
    for (int i = 0; i < config.grid_points; ++i) {
        WeightSweepPoint pt;
        pt.w = static_cast<double>(i) / static_cast<double>(config.grid_points - 1);
        pt.delta_mean = sweep.mean_slope * pt.w + sweep.mean_intercept;
        pt.delta_var = sweep.var_a * pt.w * pt.w + sweep.var_b * pt.w + sweep.var_c;
        if (config.with_pspdt) {
            PspdtConfig cfg = config.pspdt;
            cfg.seed = Rng(config.pspdt.seed).split(static_cast<std::uint64_t>(i)).seed();
            cfg.n_null_reps = 0; // the statistic and cutoff suffice on a grid
            const MixtureSsrt mix{pt.w, bar_a, bar_b};
            pt.pspdt_stat = pspdt(Distribution{bar_s}, Distribution{mix}, cfg).d_bar;
        }
        sweep.points.push_back(pt);
    }
    return sweep;
}

} // namespace ssrt

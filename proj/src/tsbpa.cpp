#include "ssrt/tsbpa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ssrt/numerics.hpp"

namespace ssrt {

namespace {

// Cross-moment sufficient statistics: the three conditional regressions have
// O(1) log likelihood once these are accumulated.
struct Suffstats {
    double n = 0;
    double sm = 0, ss = 0, st = 0;       // sums of mu, sigma, tau
    double smm = 0, sss = 0, stt = 0;    // sums of squares
    double sms = 0, smt = 0, sst = 0;    // cross sums
};

Suffstats accumulate(const SubjectTriples& data) {
    Suffstats s;
    s.n = static_cast<double>(data.rows.size());
    for (const auto& r : data.rows) {
        const double m = r[0], g = r[1], t = r[2];
        s.sm += m; s.ss += g; s.st += t;
        s.smm += m * m; s.sss += g * g; s.stt += t * t;
        s.sms += m * g; s.smt += m * t; s.sst += g * t;
    }
    return s;
}

constexpr double kHalfLog2Pi = 0.9189385332046727;

// Gaussian log likelihood from residual sum of squares.
double normal_loglik(double rss, double n, double sd) {
    return -n * (kHalfLog2Pi + std::log(sd)) - rss / (2.0 * sd * sd);
}

double log_posterior(const std::vector<double>& x, const Suffstats& s,
                     const Stage2Config& cfg) {
    const double mu_mu = x[0];
    const double b20 = x[1], b21 = x[2];
    const double b30 = x[3], b31 = x[4], b32 = x[5];
    const double sig_m = x[6], sig_s = x[7], sig_t = x[8];

    // mu_i ~ N(mu_mu, sig_m^2)
    const double rss1 = s.smm - 2.0 * mu_mu * s.sm + s.n * mu_mu * mu_mu;
    // sigma_i | mu_i ~ N(b20 + b21 mu_i, sig_s^2)
    const double rss2 = s.sss + s.n * b20 * b20 + b21 * b21 * s.smm - 2.0 * b20 * s.ss -
                        2.0 * b21 * s.sms + 2.0 * b20 * b21 * s.sm;
    // tau_i | mu_i, sigma_i ~ N(b30 + b31 mu_i + b32 sigma_i, sig_t^2)
    const double rss3 = s.stt + s.n * b30 * b30 + b31 * b31 * s.smm + b32 * b32 * s.sss -
                        2.0 * b30 * s.st - 2.0 * b31 * s.smt - 2.0 * b32 * s.sst +
                        2.0 * b30 * b31 * s.sm + 2.0 * b30 * b32 * s.ss +
                        2.0 * b31 * b32 * s.sms;

    double lp = normal_loglik(std::max(rss1, 0.0), s.n, sig_m) +
                normal_loglik(std::max(rss2, 0.0), s.n, sig_s) +
                normal_loglik(std::max(rss3, 0.0), s.n, sig_t);

    // Priors: coefficients N(0, coef_var); scales half-normal (truncation and
    // positivity enforced by the sampler bounds, normalizers constant).
    for (int j = 0; j < 6; ++j) lp -= x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] / (2.0 * cfg.coef_prior_var);
    for (int j = 6; j < 9; ++j) lp -= x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] / (2.0 * cfg.scale_prior_var);
    return std::max(lp, kLogFloor);
}

ParamSummary summarize_draws(std::vector<double> draws) {
    ParamSummary p;
    p.mean = mean_of(draws);
    p.sd = draws.size() > 1 ? std::sqrt(variance_of(draws)) : 0.0;
    std::sort(draws.begin(), draws.end());
    p.lo95 = empirical_quantile_sorted(draws, 0.025);
    p.hi95 = empirical_quantile_sorted(draws, 0.975);
    return p;
}

} // namespace

std::array<double, 3> stage2_mean_vector(const std::array<double, kStage2Dim>& d) {
    const double mu = d[0];
    const double sigma = d[1] + d[2] * mu;
    const double tau = d[3] + d[4] * mu + d[5] * sigma;
    return {mu, sigma, tau};
}

std::array<std::array<double, 3>, 3> stage2_covariance(const std::array<double, kStage2Dim>& d) {
    const double b21 = d[2], b31 = d[4], b32 = d[5];
    const double vm = d[6] * d[6];
    const double cms = b21 * vm;
    const double vs = b21 * b21 * vm + d[7] * d[7];
    const double cmt = (b31 + b32 * b21) * vm;
    const double cst = b31 * cms + b32 * vs;
    const double vt = b31 * b31 * vm + b32 * b32 * vs + 2.0 * b31 * b32 * cms + d[8] * d[8];
    return {{{vm, cms, cmt}, {cms, vs, cst}, {cmt, cst, vt}}};
}

Stage2Posterior fit_stage2(const SubjectTriples& data, const Stage2Config& cfg) {
    if (data.rows.size() < 3)
        throw std::domain_error("fit_stage2: need at least three subjects");
    for (const auto& r : data.rows)
        for (double v : r)
            if (!(std::isfinite(v) && v > 0.0))
                throw std::domain_error("fit_stage2: subject triples must be positive and finite");

    const Suffstats suff = accumulate(data);
    const double n = suff.n;

    // Column means and sds drive initialization and degeneracy detection.
    const double mean_m = suff.sm / n, mean_s = suff.ss / n, mean_t = suff.st / n;
    auto col_sd = [&](double sum_sq, double mean) {
        const double v = std::max(sum_sq / n - mean * mean, 0.0);
        return std::sqrt(v);
    };
    const double sd_m = col_sd(suff.smm, mean_m);
    const double sd_s = col_sd(suff.sss, mean_s);
    const double sd_t = col_sd(suff.stt, mean_t);

    Stage2Posterior post;
    post.n_iter = cfg.n_iter;
    post.n_burn = cfg.n_burn;
    if (sd_m < 1e-9 && sd_s < 1e-9 && sd_t < 1e-9) {
        post.degenerate_data = true;
        post.warnings.push_back("all subject triples identical; scale posteriors pinned near 0");
    }

    std::vector<std::pair<double, double>> bounds = {
        {-1e6, 1e6}, {-1e6, 1e6}, {-100.0, 100.0}, {-1e6, 1e6}, {-100.0, 100.0},
        {-100.0, 100.0}, {1e-6, cfg.scale_hi}, {1e-6, cfg.scale_hi}, {1e-6, cfg.scale_hi}};

    const double spread = std::max({sd_m, sd_s, sd_t, 1.0});
    std::vector<double> steps0 = {spread / 5.0, spread / 5.0, 0.1,
                                  spread / 5.0, 0.1, 0.1,
                                  std::max(sd_m, 0.1) / 5.0, std::max(sd_s, 0.1) / 5.0,
                                  std::max(sd_t, 0.1) / 5.0};

    McmcOptions mopts;
    mopts.n_iter = cfg.n_iter;
    mopts.n_burn = cfg.n_burn;

    std::vector<ChainResult> chains(static_cast<std::size_t>(cfg.n_chains));
    auto run_one = [&](int c) {
        Rng init_rng = Rng(cfg.seed).split(2 * static_cast<std::uint64_t>(c));
        Rng chain_rng = Rng(cfg.seed).split(2 * static_cast<std::uint64_t>(c) + 1);
        // Overdispersed around the data scale.
        std::vector<double> init = {
            mean_m + init_rng.uniform(-2.0, 2.0) * std::max(sd_m, 1.0),
            mean_s + init_rng.uniform(-2.0, 2.0) * std::max(sd_s, 1.0),
            init_rng.uniform(-0.5, 0.5),
            mean_t + init_rng.uniform(-2.0, 2.0) * std::max(sd_t, 1.0),
            init_rng.uniform(-0.5, 0.5),
            init_rng.uniform(-0.5, 0.5),
            std::max(sd_m, 0.5) * init_rng.uniform(0.5, 2.0),
            std::max(sd_s, 0.5) * init_rng.uniform(0.5, 2.0),
            std::max(sd_t, 0.5) * init_rng.uniform(0.5, 2.0)};
        for (int j = 0; j < kStage2Dim; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            init[ju] = std::clamp(init[ju], bounds[ju].first, bounds[ju].second);
        }
        FunctionTarget target([&](const std::vector<double>& x) {
            return log_posterior(x, suff, cfg);
        }, kStage2Dim);
        chains[static_cast<std::size_t>(c)] =
            run_chain(target, bounds, init, steps0, mopts, chain_rng);
    };

    unsigned int max_threads = cfg.n_threads > 0 ? static_cast<unsigned int>(cfg.n_threads)
                                                 : std::max(1u, std::thread::hardware_concurrency());
    if (max_threads <= 1 || cfg.n_chains == 1) {
        for (int c = 0; c < cfg.n_chains; ++c) run_one(c);
    } else {
        std::vector<std::thread> pool;
        for (int c = 0; c < cfg.n_chains; ++c) pool.emplace_back(run_one, c);
        for (auto& t : pool) t.join();
    }
    post.chains = std::move(chains);
    post.rhat = split_rhat(post.chains, cfg.n_burn);

    // Pool post-burn draws.
    for (int p = 0; p < kStage2Dim; ++p) {
        std::vector<double> pooled;
        for (const ChainResult& c : post.chains)
            for (std::size_t i = static_cast<std::size_t>(cfg.n_burn); i < c.draws.size(); ++i)
                pooled.push_back(c.draws[i][static_cast<std::size_t>(p)]);
        post.params[static_cast<std::size_t>(p)] = summarize_draws(std::move(pooled));
    }

    // Derived quantities, evaluated per draw then averaged.
    std::array<std::vector<double>, 3> mean_draws;
    std::array<std::vector<double>, 3> corr_draws;
    for (const ChainResult& c : post.chains) {
        for (std::size_t i = static_cast<std::size_t>(cfg.n_burn); i < c.draws.size(); ++i) {
            std::array<double, kStage2Dim> d;
            std::copy_n(c.draws[i].begin(), kStage2Dim, d.begin());
            const auto mv = stage2_mean_vector(d);
            const auto cov = stage2_covariance(d);
            for (int k = 0; k < 3; ++k) mean_draws[static_cast<std::size_t>(k)].push_back(mv[static_cast<std::size_t>(k)]);
            corr_draws[0].push_back(cov[0][1] / std::sqrt(cov[0][0] * cov[1][1]));
            corr_draws[1].push_back(cov[0][2] / std::sqrt(cov[0][0] * cov[2][2]));
            corr_draws[2].push_back(cov[1][2] / std::sqrt(cov[1][1] * cov[2][2]));
        }
    }
    for (int k = 0; k < 3; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        post.overall_triple[ku] = mean_of(mean_draws[ku]);
        post.overall_triple_sd[ku] = std::sqrt(variance_of(mean_draws[ku]));
        post.implied_corr[ku] = mean_of(corr_draws[ku]);
    }

    for (int p = 0; p < kStage2Dim; ++p)
        if (post.rhat[static_cast<std::size_t>(p)] > 1.1)
            post.warnings.push_back(std::string("R-hat above 1.1 for ") +
                                    kStage2ParamNames[static_cast<std::size_t>(p)]);
    return post;
}

OverallDistributions overall_distributions(const Stage2Posterior& stage_s,
                                           const Stage2Posterior& stage_a,
                                           const Stage2Posterior& stage_b, double w_bar) {
    if (!(w_bar >= 0.0 && w_bar <= 1.0))
        throw std::domain_error("overall_distributions: w_bar outside [0,1]");
    OverallDistributions out;
    out.single = ExGaussianParams{stage_s.overall_triple[0], stage_s.overall_triple[1],
                                  stage_s.overall_triple[2]};
    out.mixture = MixtureSsrt{
        w_bar,
        ExGaussianParams{stage_a.overall_triple[0], stage_a.overall_triple[1],
                         stage_a.overall_triple[2]},
        ExGaussianParams{stage_b.overall_triple[0], stage_b.overall_triple[1],
                         stage_b.overall_triple[2]}};
    out.single.validate();
    out.mixture.validate();
    return out;
}

} // namespace ssrt

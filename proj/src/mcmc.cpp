#include "ssrt/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ssrt/numerics.hpp"

namespace ssrt {

ChainResult run_chain(CoordinateTarget& target,
                      const std::vector<std::pair<double, double>>& bounds,
                      const std::vector<double>& init, const std::vector<double>& steps0,
                      const McmcOptions& opts, Rng rng) {
    const int dim = target.dim();
    if (static_cast<int>(bounds.size()) != dim || static_cast<int>(init.size()) != dim ||
        static_cast<int>(steps0.size()) != dim)
        throw std::invalid_argument("run_chain: dimension mismatch");
    if (opts.n_burn >= opts.n_iter)
        throw std::invalid_argument("run_chain: n_burn must be < n_iter");

    std::vector<double> x = init;
    std::vector<double> log_step(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) log_step[static_cast<std::size_t>(j)] = std::log(steps0[static_cast<std::size_t>(j)]);

    double lp = target.init(x);

    ChainResult out;
    out.draws.reserve(static_cast<std::size_t>(opts.n_iter));
    std::vector<long> accepted(static_cast<std::size_t>(dim), 0);

    for (int iter = 1; iter <= opts.n_iter; ++iter) {
        for (int j = 0; j < dim; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double step = std::exp(log_step[ju]);
            const double proposal = x[ju] + step * rng.normal();

            double alpha = 0.0; // realized acceptance probability
            if (proposal >= bounds[ju].first && proposal <= bounds[ju].second) {
                const double lp_new = target.propose(j, proposal);
                alpha = std::min(1.0, std::exp(lp_new - lp));
                if (rng.uniform01() < alpha) {
                    target.accept(j, proposal);
                    x[ju] = proposal;
                    lp = lp_new;
                    if (iter > opts.n_burn) ++accepted[ju];
                }
            }
            if (iter <= opts.n_burn) {
                const double gain =
                    opts.adapt_rate / std::pow(static_cast<double>(iter), opts.adapt_decay);
                log_step[ju] += gain * (alpha - opts.target_acceptance);
                // Keep proposals sane even on pathological targets.
                log_step[ju] = std::clamp(log_step[ju], -20.0, 20.0);
            }
        }
        out.draws.push_back(x);
    }

    const double denom = static_cast<double>(opts.n_iter - opts.n_burn);
    out.acceptance_rates.resize(static_cast<std::size_t>(dim));
    out.final_steps.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        out.acceptance_rates[static_cast<std::size_t>(j)] =
            static_cast<double>(accepted[static_cast<std::size_t>(j)]) / denom;
        out.final_steps[static_cast<std::size_t>(j)] = std::exp(log_step[static_cast<std::size_t>(j)]);
    }
    return out;
}

std::vector<double> split_rhat(const std::vector<ChainResult>& chains, int n_burn) {
    if (chains.empty() || chains.front().draws.empty())
        throw std::invalid_argument("split_rhat: no draws");
    const std::size_t dim = chains.front().draws.front().size();
    const std::size_t n_total = chains.front().draws.size();
    const std::size_t kept = n_total - static_cast<std::size_t>(n_burn);
    const std::size_t half = kept / 2;
    if (half < 2) throw std::invalid_argument("split_rhat: too few post-burn draws");

    std::vector<double> rhat(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        std::vector<double> seq_mean, seq_var;
        for (const ChainResult& c : chains) {
            for (int s = 0; s < 2; ++s) {
                const std::size_t begin = static_cast<std::size_t>(n_burn) + static_cast<std::size_t>(s) * half;
                std::vector<double> seg;
                seg.reserve(half);
                for (std::size_t i = begin; i < begin + half; ++i) seg.push_back(c.draws[i][p]);
                seq_mean.push_back(mean_of(seg));
                seq_var.push_back(variance_of(seg));
            }
        }
        const double w = mean_of(seq_var);
        const double L = static_cast<double>(half);
        const double b_over_n = seq_mean.size() > 1 ? variance_of(seq_mean) : 0.0;
        if (w <= 0.0) {
            // Degenerate (constant) sequences: identical chains count as converged.
            rhat[p] = b_over_n <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
            continue;
        }
        const double var_plus = (L - 1.0) / L * w + b_over_n;
        rhat[p] = std::sqrt(var_plus / w);
    }
    return rhat;
}

} // namespace ssrt

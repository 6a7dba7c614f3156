#include "ssrt/bayesfit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ssrt/numerics.hpp"

namespace ssrt {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return Rng(seed).split(tag).seed();
}

ExGaussianParams PosteriorSummary::go_estimate() const {
    return ExGaussianParams{params[0].mean, params[1].mean, params[2].mean};
}

ExGaussianParams PosteriorSummary::stop_estimate() const {
    return ExGaussianParams{params[3].mean, params[4].mean, params[5].mean};
}

namespace {

// Posterior for the six race parameters with block caching keyed on the
// accepted state: go-density terms, stop-survival terms, and the inhibit
// integrals are only recomputed when a coordinate they depend on moves.
class IbpaTarget final : public CoordinateTarget {
public:
    IbpaTarget(const RaceLikelihoodInput& input, const LikelihoodOptions& opts, bool prior_only)
        : input_(input), opts_(opts), prior_only_(prior_only) {}

    int dim() const override { return kRaceDim; }

    double init(const std::vector<double>& x) override {
        state_ = x;
        go_block_ = go_block(go_of(state_));
        stop_block_ = stop_block(stop_of(state_));
        race_block_ = race_block(go_of(state_), stop_of(state_));
        return total();
    }

    double propose(int j, double value) override {
        std::vector<double> y = state_;
        y[static_cast<std::size_t>(j)] = value;
        const bool go_moved = j < 3;
        pending_go_ = go_moved ? go_block(go_of(y)) : go_block_;
        pending_stop_ = go_moved ? stop_block_ : stop_block(stop_of(y));
        pending_race_ = race_block(go_of(y), stop_of(y));
        return pending_go_ + pending_stop_ + pending_race_;
    }

    void accept(int j, double value) override {
        state_[static_cast<std::size_t>(j)] = value;
        go_block_ = pending_go_;
        stop_block_ = pending_stop_;
        race_block_ = pending_race_;
    }

private:
    static ExGaussianParams go_of(const std::vector<double>& x) {
        return ExGaussianParams{x[0], x[1], x[2]};
    }
    static ExGaussianParams stop_of(const std::vector<double>& x) {
        return ExGaussianParams{x[3], x[4], x[5]};
    }

    double total() const { return go_block_ + stop_block_ + race_block_; }

    // log f_go over go RTs and over signal-respond RTs.
    double go_block(const ExGaussianParams& go) const {
        if (prior_only_) return 0.0;
        double ll = loglik_go(go, input_.go_rts);
        for (const auto& [rt, ssd] : input_.signal_respond) ll += exg_log_pdf(go, rt);
        return std::max(ll, kLogFloor);
    }

    // log(1 - F_stop) over signal-respond trials.
    double stop_block(const ExGaussianParams& stop) const {
        if (prior_only_) return 0.0;
        double ll = 0.0;
        for (const auto& [rt, ssd] : input_.signal_respond)
            ll += stop_log_survival(stop, rt - ssd, opts_);
        return std::max(ll, kLogFloor);
    }

    // Inhibit integrals, one quadrature per distinct SSD.
    double race_block(const ExGaussianParams& go, const ExGaussianParams& stop) const {
        if (prior_only_ || input_.signal_inhibit_ssds.empty()) return 0.0;
        RaceLikelihoodInput only_inhibit;
        only_inhibit.signal_inhibit_ssds = input_.signal_inhibit_ssds;
        return loglik_stop(go, stop, only_inhibit, opts_);
    }

    const RaceLikelihoodInput& input_;
    LikelihoodOptions opts_;
    bool prior_only_;
    std::vector<double> state_;
    double go_block_ = 0.0, stop_block_ = 0.0, race_block_ = 0.0;
    double pending_go_ = 0.0, pending_stop_ = 0.0, pending_race_ = 0.0;
};

ParamSummary summarize(std::vector<double> draws) {
    ParamSummary s;
    s.mean = mean_of(draws);
    s.sd = draws.size() > 1 ? std::sqrt(variance_of(draws)) : 0.0;
    std::sort(draws.begin(), draws.end());
    s.lo95 = empirical_quantile_sorted(draws, 0.025);
    s.hi95 = empirical_quantile_sorted(draws, 0.975);
    return s;
}

} // namespace

IbpaResult fit_ibpa(const RaceLikelihoodInput& input, const IbpaConfig& config) {
    input.validate();
    if (config.n_chains < 1) throw std::invalid_argument("fit_ibpa: need at least one chain");
    if (!(config.prior_lo < config.prior_hi))
        throw std::invalid_argument("fit_ibpa: bad prior support");

    const std::vector<std::pair<double, double>> bounds(
        kRaceDim, {config.prior_lo, config.prior_hi});
    const std::vector<double> steps0(kRaceDim, (config.prior_hi - config.prior_lo) / 40.0);

    McmcOptions mopts;
    mopts.n_iter = config.n_iter;
    mopts.n_burn = config.n_burn;

    std::vector<ChainResult> chains(static_cast<std::size_t>(config.n_chains));
    auto run_one = [&](int c) {
        // Overdispersed start: uniform over the prior box, chain-specific stream.
        Rng init_rng = Rng(config.seed).split(2 * static_cast<std::uint64_t>(c));
        Rng chain_rng = Rng(config.seed).split(2 * static_cast<std::uint64_t>(c) + 1);
        std::vector<double> init(kRaceDim);
        for (auto& v : init) v = init_rng.uniform(config.prior_lo, config.prior_hi);
        IbpaTarget target(input, config.likelihood, config.prior_only);
        chains[static_cast<std::size_t>(c)] =
            run_chain(target, bounds, init, steps0, mopts, chain_rng);
    };

    unsigned int max_threads = config.n_threads > 0
                                   ? static_cast<unsigned int>(config.n_threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
    if (max_threads <= 1 || config.n_chains == 1) {
        for (int c = 0; c < config.n_chains; ++c) run_one(c);
    } else {
        std::vector<std::thread> pool;
        for (int c = 0; c < config.n_chains; ++c) pool.emplace_back(run_one, c);
        for (auto& t : pool) t.join();
    }

    IbpaResult result;
    result.chains.chains = std::move(chains);
    result.chains.n_iter = config.n_iter;
    result.chains.n_burn = config.n_burn;
    result.chains.rhat = split_rhat(result.chains.chains, config.n_burn);

    for (int p = 0; p < kRaceDim; ++p) {
        std::vector<double> pooled;
        pooled.reserve(static_cast<std::size_t>(config.n_chains) *
                       static_cast<std::size_t>(config.n_iter - config.n_burn));
        for (const ChainResult& c : result.chains.chains)
            for (std::size_t i = static_cast<std::size_t>(config.n_burn); i < c.draws.size(); ++i)
                pooled.push_back(c.draws[i][static_cast<std::size_t>(p)]);
        result.summary.params[static_cast<std::size_t>(p)] = summarize(std::move(pooled));
    }

    for (int p = 0; p < kRaceDim; ++p) {
        if (result.chains.rhat[static_cast<std::size_t>(p)] > 1.1) {
            result.chains.warnings.push_back(std::string("R-hat above 1.1 for ") +
                                             kRaceParamNames[static_cast<std::size_t>(p)]);
            result.chains.converged = false;
        }
    }
    for (std::size_t c = 0; c < result.chains.chains.size(); ++c) {
        const auto& acc = result.chains.chains[c].acceptance_rates;
        if (std::all_of(acc.begin(), acc.end(), [](double a) { return a == 0.0; })) {
            result.chains.warnings.push_back("chain " + std::to_string(c) +
                                             " accepted no proposals after burn-in");
            result.chains.converged = false;
        }
    }
    return result;
}

IbpaResult fit_ibpa(const SstDataset& view, const IbpaConfig& config) {
    if (view.n_go() < 1 || view.n_stop() < 1)
        throw std::domain_error("fit_ibpa: view needs at least one go and one stop trial");
    return fit_ibpa(make_likelihood_input(view), config);
}

ClusterFits fit_all_clusters(const SstDataset& d, const ClusterPartition& p,
                             const IbpaConfig& config) {
    const ClusterViews views = extract_views(d, p);
    for (ClusterType c : {ClusterType::S, ClusterType::A, ClusterType::B}) {
        const SstDataset& v = select_view(views, c);
        if (v.n_go() < 1 || v.n_stop() < 2)
            throw std::domain_error("fit_all_clusters: view " + cluster_name(c) +
                                    " needs at least one go and two stop trials");
    }
    ClusterFits fits;
    fits.w_a = p.w_a;
    IbpaConfig cfg = config;
    cfg.seed = derive_seed(config.seed, 101);
    fits.type_s = fit_ibpa(views.full, cfg);
    cfg.seed = derive_seed(config.seed, 102);
    fits.type_a = fit_ibpa(views.type_a, cfg);
    cfg.seed = derive_seed(config.seed, 103);
    fits.type_b = fit_ibpa(views.type_b, cfg);
    return fits;
}

} // namespace ssrt

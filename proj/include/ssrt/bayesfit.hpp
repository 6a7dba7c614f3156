// Individual Bayesian parametric estimation of (theta_go, theta_stop) by
// component-wise adaptive Metropolis over the censored race likelihood with
// uniform priors on [10,2000]^6.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssrt/likelihood.hpp"
#include "ssrt/mcmc.hpp"
#include "ssrt/racesim.hpp"

namespace ssrt {

inline constexpr int kRaceDim = 6;
inline constexpr std::array<const char*, kRaceDim> kRaceParamNames = {
    "mu_go", "sigma_go", "tau_go", "mu_stop", "sigma_stop", "tau_stop"};

struct IbpaConfig {
    int n_chains = 3;
    int n_iter = 20000;
    int n_burn = 5000;
    double prior_lo = kPriorLo;
    double prior_hi = kPriorHi;
    std::uint64_t seed = 1;
    int n_threads = 0; // 0: one thread per chain up to hardware concurrency
    bool prior_only = false; // likelihood forced to 0; samples the prior
    LikelihoodOptions likelihood;
};

struct ParamSummary {
    double mean = 0.0;
    double sd = 0.0;
    double lo95 = 0.0;
    double hi95 = 0.0;

    bool covers(double truth) const { return truth >= lo95 && truth <= hi95; }
};

struct PosteriorSummary {
    std::array<ParamSummary, kRaceDim> params;

    ExGaussianParams go_estimate() const;
    ExGaussianParams stop_estimate() const;
};

struct PosteriorChains {
    std::vector<ChainResult> chains;
    int n_iter = 0;
    int n_burn = 0;
    std::vector<double> rhat;           // per parameter
    std::vector<std::string> warnings;  // convergence issues, non-fatal
    bool converged = true;
};

struct IbpaResult {
    PosteriorChains chains;
    PosteriorSummary summary;
};

// Precondition: the view holds at least one go and one stop trial.
IbpaResult fit_ibpa(const SstDataset& view, const IbpaConfig& config);
IbpaResult fit_ibpa(const RaceLikelihoodInput& input, const IbpaConfig& config);

struct ClusterFits {
    IbpaResult type_s, type_a, type_b;
    double w_a = 0.0;
};

// Runs IBPA on the type-S, type-A and type-B views; each view must hold at
// least one go and two stop trials.
ClusterFits fit_all_clusters(const SstDataset& d, const ClusterPartition& p,
                             const IbpaConfig& config);

// Seed for a named sub-task of a parent seed (chains, clusters, replicates).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

} // namespace ssrt

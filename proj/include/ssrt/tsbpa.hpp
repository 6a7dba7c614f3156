// Stage 2 of the two-stage Bayesian parametric approach: pools per-subject
// posterior-mean stop triples through a triangular conditional-regression
// factorization of a trivariate normal, giving correlation-aware overall
// (mu, sigma, tau) estimates per cluster.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssrt/bayesfit.hpp"
#include "ssrt/mixture.hpp"

namespace ssrt {

struct SubjectTriples {
    std::vector<std::array<double, 3>> rows; // per subject (mu, sigma, tau)
    ClusterType cluster = ClusterType::S;
};

inline constexpr int kStage2Dim = 9;
inline constexpr std::array<const char*, kStage2Dim> kStage2ParamNames = {
    "mu_mu",  "beta20", "beta21",    "beta30",     "beta31",
    "beta32", "sigma_mu", "sigma_sigma", "sigma_tau"};

struct Stage2Config {
    int n_chains = 3;
    int n_iter = 100000;
    int n_burn = 5000;
    std::uint64_t seed = 1;
    int n_threads = 0;
    // Hyperpriors, normal(mean 0, variance v): vague N(0,1000) on location and
    // regression coefficients, half-N(0,10) truncated to [0,1000] on scales.
    double coef_prior_var = 1000.0;
    double scale_prior_var = 10.0;
    double scale_hi = 1000.0;
};

struct Stage2Posterior {
    std::vector<ChainResult> chains;
    int n_iter = 0;
    int n_burn = 0;
    std::array<ParamSummary, kStage2Dim> params;
    // Posterior mean of the population mean vector implied by the triangular
    // factorization, evaluated per draw.
    std::array<double, 3> overall_triple{};
    std::array<double, 3> overall_triple_sd{};
    // Posterior means of the implied correlations (rho_ms, rho_mt, rho_st).
    std::array<double, 3> implied_corr{};
    std::vector<double> rhat;
    bool degenerate_data = false;
    std::vector<std::string> warnings;
};

// Requires at least three subjects.
Stage2Posterior fit_stage2(const SubjectTriples& data, const Stage2Config& config);

// Population mean vector implied by one draw of the nine stage-2 parameters.
std::array<double, 3> stage2_mean_vector(const std::array<double, kStage2Dim>& draw);
// Implied 3x3 covariance of (mu, sigma, tau) for one draw.
std::array<std::array<double, 3>, 3> stage2_covariance(const std::array<double, kStage2Dim>& draw);

struct OverallDistributions {
    ExGaussianParams single;
    MixtureSsrt mixture;
};

// Overall single (from the S-cluster triple) and mixture (from A/B triples
// with the cohort-mean weight) SSRT distributions.
OverallDistributions overall_distributions(const Stage2Posterior& stage_s,
                                           const Stage2Posterior& stage_a,
                                           const Stage2Posterior& stage_b, double w_bar);

} // namespace ssrt

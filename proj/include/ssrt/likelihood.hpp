// Censored race-model likelihood: go-trial log likelihood plus the
// three-term stop-trial log likelihood (signal-respond density, stop
// survival, and the inhibit integral over the unobserved finishing times).
#pragma once

#include <vector>

#include "ssrt/exgauss.hpp"
#include "ssrt/racesim.hpp"

namespace ssrt {

struct RaceLikelihoodInput {
    std::vector<double> go_rts;
    std::vector<std::pair<double, double>> signal_respond; // (rt_ms, ssd_ms)
    std::vector<double> signal_inhibit_ssds;

    void validate() const;
};

RaceLikelihoodInput make_likelihood_input(const SstDataset& view);

struct LikelihoodOptions {
    // Truncate the stop distribution to [1,1000] ms (renormalized) the way
    // the reference estimation software does; off by default.
    bool beests_truncation = false;
    double quad_epsrel = 1e-8;
    double quad_epsabs = 1e-12;
};

// Sum of log f_go over the observed go RTs; empty data gives 0.
double loglik_go(const ExGaussianParams& theta_go, const std::vector<double>& go_rts);

// Signal-respond terms log f_go(t_r) + log(1 - F_stop(t_r - ssd_r)) plus
// inhibit terms log integral_0^inf (1 - F_go(t)) f_stop(t - ssd) dt.
double loglik_stop(const ExGaussianParams& theta_go, const ExGaussianParams& theta_stop,
                   const RaceLikelihoodInput& input, const LikelihoodOptions& opts = {});

// log(1 - F_stop(x)) with the optional truncation applied.
double stop_log_survival(const ExGaussianParams& theta_stop, double x,
                         const LikelihoodOptions& opts = {});

// The inhibit-trial integral on the absolute-time axis [0, T_cap]; equals the
// probability of a successful inhibition at that delay (up to the negligible
// mass below t=0).
double inhibit_integral(const ExGaussianParams& theta_go, const ExGaussianParams& theta_stop,
                        double ssd_ms, const LikelihoodOptions& opts = {});

} // namespace ssrt

// Nonparametric SSRT retrieval from race-model-implied quantities (single
// and two-cluster mixture forms) and the cluster-weight sweep over the mean
// and variance disparities between mixture and single SSRT indices.
#pragma once

#include <vector>

#include "ssrt/exgauss.hpp"
#include "ssrt/sotest.hpp"

namespace ssrt {

// P(successful inhibition | delay): probability the stop process beats the
// go process, integrated over the full stop support.
double prob_successful_inhibition(const ExGaussianParams& go, const ExGaussianParams& stop,
                                  double ssd_ms);

// Signal-respond RT density implied by the race model,
// f_go(t) (1 - F_stop(t - ssd)) / (1 - P(SI|ssd)).
double srrt_density(const ExGaussianParams& go, const ExGaussianParams& stop, double ssd_ms,
                    double t);

// Retrieves F_SSRT(t) from the race-implied inputs:
// 1 - (1 - P(SI|Td)) f_SRRT(t+Td|Td) / f_GORT(t+Td). Throws NumericalError
// when the go density vanishes at t+Td.
double colonius_cdf(const ExGaussianParams& go, const ExGaussianParams& stop, double t_d,
                    double t);

struct ColoniusClusterInputs {
    ExGaussianParams go;
    ExGaussianParams stop;
    double t_d = 0.0;
};

// Two-cluster mixture form: 1 - w_a (...A term...) - w_b (...B term...).
double colonius_mixture_cdf(const ColoniusClusterInputs& a, const ColoniusClusterInputs& b,
                            double w_a, double t);

struct SubjectClusterSummary {
    ExGaussianParams theta_s, theta_a, theta_b;
};

struct WeightSweepConfig {
    int grid_points = 101;
    bool with_pspdt = false;
    PspdtConfig pspdt;
};

struct WeightSweepPoint {
    double w = 0.0;
    double delta_mean = 0.0;
    double delta_var = 0.0;
    double pspdt_stat = 0.0; // averaged KS statistic, only when requested
};

struct WeightSweep {
    std::vector<WeightSweepPoint> points;
    // delta_mean(w) = mean_slope*w + mean_intercept; delta_var(w) =
    // var_a*w^2 + var_b*w + var_c with var_a <= 0.
    double mean_slope = 0.0, mean_intercept = 0.0;
    double var_a = 0.0, var_b = 0.0, var_c = 0.0;
    // Vertex of the variance parabola clamped to [0,1] (the maximizer over
    // the admissible weights).
    double argmax_var_w = 0.0;
    double pspdt_cutoff = 0.0;
};

// Cohort-averaged disparities across the weight grid. Mean differences are
// averaged per subject; squared mean differences are averaged before
// squaring enters the variance expansion.
WeightSweep weight_sweep(const std::vector<SubjectClusterSummary>& cohort,
                         const WeightSweepConfig& config = {});

} // namespace ssrt

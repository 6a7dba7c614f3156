// Component-wise adaptive random-walk Metropolis engine. Step sizes adapt
// toward a per-coordinate acceptance target during burn-in (Robbins-Monro on
// the log step) and are frozen afterwards. Chains run on independent RNG
// streams and may execute concurrently.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ssrt/rng.hpp"

namespace ssrt {

// Target density seen by the sampler. Implementations may cache per-block
// terms keyed on the accepted state: `propose` always refers to the accepted
// state with exactly one coordinate replaced, and `accept` commits the last
// proposal.
class CoordinateTarget {
public:
    virtual ~CoordinateTarget() = default;
    virtual int dim() const = 0;
    // Full evaluation; establishes `x` as the accepted state.
    virtual double init(const std::vector<double>& x) = 0;
    // Log density of the accepted state with coordinate j set to value.
    virtual double propose(int j, double value) = 0;
    virtual void accept(int j, double value) = 0;
};

// Adapter for plain log-density functions (no caching).
class FunctionTarget final : public CoordinateTarget {
public:
    FunctionTarget(std::function<double(const std::vector<double>&)> logp, int dim)
        : logp_(std::move(logp)), dim_(dim) {}
    int dim() const override { return dim_; }
    double init(const std::vector<double>& x) override {
        x_ = x;
        return logp_(x_);
    }
    double propose(int j, double value) override {
        std::vector<double> y = x_;
        y[static_cast<std::size_t>(j)] = value;
        return logp_(y);
    }
    void accept(int j, double value) override { x_[static_cast<std::size_t>(j)] = value; }

private:
    std::function<double(const std::vector<double>&)> logp_;
    int dim_;
    std::vector<double> x_;
};

struct McmcOptions {
    int n_iter = 20000;
    int n_burn = 5000;
    double target_acceptance = 0.44;
    double adapt_rate = 1.0;   // Robbins-Monro gain constant
    double adapt_decay = 0.6;  // gain ~ adapt_rate / t^adapt_decay
};

struct ChainResult {
    std::vector<std::vector<double>> draws;    // n_iter rows, dim columns
    std::vector<double> acceptance_rates;      // per coordinate, post burn-in
    std::vector<double> final_steps;
};

// One chain; `bounds` are hard support limits (proposals outside are
// rejected without evaluation), `init` the start state, `steps0` the initial
// proposal standard deviations.
ChainResult run_chain(CoordinateTarget& target,
                      const std::vector<std::pair<double, double>>& bounds,
                      const std::vector<double>& init, const std::vector<double>& steps0,
                      const McmcOptions& opts, Rng rng);

// Split-R-hat per parameter across chains (post burn-in halves).
std::vector<double> split_rhat(const std::vector<ChainResult>& chains, int n_burn);

} // namespace ssrt

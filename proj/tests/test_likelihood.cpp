#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ssrt/likelihood.hpp"
#include "ssrt/numerics.hpp"
#include "ssrt/rng.hpp"

using namespace ssrt;

namespace {

const ExGaussianParams kGo{300.0, 50.0, 100.0};
const ExGaussianParams kStop{200.0, 30.0, 60.0};

} // namespace

TEST_SUITE("likelihood") {

TEST_CASE("go log likelihood: empty, single point, and frozen oracle value") {
    CHECK(loglik_go(ExGaussianParams{400.0, 60.0, 80.0}, {}) == 0.0);

    const ExGaussianParams theta{400.0, 60.0, 80.0};
    CHECK(loglik_go(theta, {473.0}) == doctest::Approx(exg_log_pdf(theta, 473.0)).epsilon(1e-14));

    // Frozen from a 40-digit quadrature evaluation of the five log densities.
    const std::vector<double> pts{350.0, 420.0, 500.0, 610.0, 280.0};
    CHECK(loglik_go(theta, pts) == doctest::Approx(-32.474621342529800788).epsilon(1e-10));
}

TEST_CASE("go log likelihood never returns -inf") {
    const ExGaussianParams theta{10.0, 10.0, 10.0};
    const double ll = loglik_go(theta, {1e6});
    CHECK(std::isfinite(ll));
    CHECK(ll >= kLogFloor);
}

TEST_CASE("stop log likelihood is zero without stop trials") {
    RaceLikelihoodInput empty;
    CHECK(loglik_stop(kGo, kStop, empty) == 0.0);
}

TEST_CASE("inhibit integral: frozen quadrature value and probability bounds") {
    // Frozen from the mpmath convolution + quadrature oracle.
    const double v = inhibit_integral(kGo, kStop, 250.0);
    CHECK(v == doctest::Approx(0.16504873870672845).epsilon(1e-7));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
}

TEST_CASE("inhibit integral matches Monte Carlo race probability") {
    Rng rng(606);
    const std::size_t n = 400000;
    std::size_t inhibited = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gort = rng.normal(kGo.mu, kGo.sigma) + rng.exponential(kGo.tau);
        const double ssrt = rng.normal(kStop.mu, kStop.sigma) + rng.exponential(kStop.tau);
        if (gort >= 250.0 + ssrt) ++inhibited;
    }
    const double mc = static_cast<double>(inhibited) / static_cast<double>(n);
    const double analytic = inhibit_integral(kGo, kStop, 250.0);
    const double se = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(n));
    CHECK(std::fabs(mc - analytic) <= 4.0 * se);
}

TEST_CASE("instant stop process at zero delay always wins") {
    const ExGaussianParams fast_stop{10.0, 1e-3, 1e-3};
    const ExGaussianParams slow_go{1500.0, 100.0, 200.0};
    const double p = inhibit_integral(slow_go, fast_stop, 0.0);
    CHECK(p == doctest::Approx(1.0).epsilon(1e-9));

    RaceLikelihoodInput in;
    in.signal_inhibit_ssds = {0.0};
    CHECK(loglik_stop(slow_go, fast_stop, in) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("three Eq.-7 terms assemble additively") {
    RaceLikelihoodInput in;
    in.signal_respond = {{320.0, 250.0}, {290.0, 200.0}};
    in.signal_inhibit_ssds = {250.0, 250.0, 300.0};

    double expected = 0.0;
    for (const auto& [rt, ssd] : in.signal_respond)
        expected += exg_log_pdf(kGo, rt) + exg_log_survival(kStop, rt - ssd);
    expected += 2.0 * std::log(inhibit_integral(kGo, kStop, 250.0));
    expected += std::log(inhibit_integral(kGo, kStop, 300.0));
    CHECK(loglik_stop(kGo, kStop, in) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("censoring consistency: larger delays raise each survival factor") {
    const double rt = 320.0;
    double prev = -1e300;
    for (double ssd : {100.0, 150.0, 200.0, 250.0, 300.0}) {
        const double term = exg_log_survival(kStop, rt - ssd);
        CHECK(term >= prev);
        prev = term;
    }
}

TEST_CASE("truncation flag renormalizes the stop distribution") {
    LikelihoodOptions trunc;
    trunc.beests_truncation = true;

    // Survival hits 0/1 at the truncation edges.
    CHECK(stop_log_survival(kStop, 0.5, trunc) == doctest::Approx(0.0));
    CHECK(stop_log_survival(kStop, 1000.5, trunc) <= kLogFloor);
    // Interior survival is rescaled upward relative to the untruncated one
    // at points where the untruncated distribution has right-tail mass
    // beyond 1000 ms.
    const double plain = std::exp(exg_log_survival(kStop, 400.0));
    const double scaled = std::exp(stop_log_survival(kStop, 400.0, trunc));
    const double z = exg_cdf(kStop, 1000.0) - exg_cdf(kStop, 1.0);
    CHECK(scaled == doctest::Approx((exg_cdf(kStop, 1000.0) - exg_cdf(kStop, 400.0)) / z)
                        .epsilon(1e-9));

    // The truncated inhibit integral still lies in [0,1] and shifts the
    // untruncated value only slightly for mid-range parameters.
    const double p_trunc = inhibit_integral(kGo, kStop, 250.0, trunc);
    CHECK(p_trunc >= 0.0);
    CHECK(p_trunc <= 1.0);
    CHECK(std::fabs(p_trunc - inhibit_integral(kGo, kStop, 250.0)) < 0.05);
    (void)plain;
}

TEST_CASE("make_likelihood_input classifies trials") {
    SstDataset d = simulate_sst(kGo, kStop, SessionDesign{}, 17);
    const RaceLikelihoodInput in = make_likelihood_input(d);
    CHECK(in.go_rts.size() == 72);
    CHECK(in.signal_respond.size() + in.signal_inhibit_ssds.size() == 24);
    CHECK(static_cast<int>(in.signal_inhibit_ssds.size()) == d.n_inhibit());
}

TEST_CASE("bad input records are rejected") {
    RaceLikelihoodInput in;
    in.signal_respond = {{-5.0, 250.0}};
    CHECK_THROWS_AS(in.validate(), std::invalid_argument);
}

} // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ssrt/numerics.hpp"
#include "ssrt/sotest.hpp"

using namespace ssrt;

TEST_SUITE("sotest") {

TEST_CASE("identical samples: D = 0, p = 1") {
    const std::vector<double> x{3.0, 1.0, 2.0, 5.0, 4.0};
    const KsResult r = ks_two_sample(x, x, Alternative::two_sided);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(1.0));
}

TEST_CASE("disjoint supports: D = 1") {
    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> y{10.0, 11.0, 12.0};
    CHECK(ks_two_sample(x, y, Alternative::two_sided).statistic == doctest::Approx(1.0));
    CHECK(ks_two_sample(x, y, Alternative::greater).statistic == doctest::Approx(1.0));
    CHECK(ks_two_sample(x, y, Alternative::less).statistic == doctest::Approx(0.0));
}

TEST_CASE("empty sample is a domain error") {
    const std::vector<double> x{1.0};
    CHECK_THROWS_AS(ks_two_sample(x, {}, Alternative::two_sided), std::domain_error);
}

TEST_CASE("frozen statistics and asymptotic p-values") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::vector<double> y{2.5, 4.5, 6.5, 8.5, 10.5, 12.5};
    const KsResult two = ks_two_sample(x, y, Alternative::two_sided);
    CHECK(two.statistic == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(two.p_value == doctest::Approx(0.7989513616577227).epsilon(1e-10));
    const KsResult greater = ks_two_sample(x, y, Alternative::greater);
    CHECK(greater.statistic == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(greater.p_value == doctest::Approx(0.4345982085070781).epsilon(1e-10));
    const KsResult less = ks_two_sample(x, y, Alternative::less);
    CHECK(less.statistic == doctest::Approx(0.0));
    CHECK(less.p_value == doctest::Approx(1.0));
}

TEST_CASE("ties are handled by the pooled right-continuous convention") {
    const std::vector<double> x{1.0, 2.0, 2.0, 3.0};
    const std::vector<double> y{2.0, 3.0, 4.0};
    CHECK(ks_two_sample(x, y, Alternative::two_sided).statistic ==
          doctest::Approx(5.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("two-sided statistic is the max of the one-sided ones") {
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> x, y;
        for (int i = 0; i < 40; ++i) x.push_back(rng.normal(0.0, 1.0));
        for (int i = 0; i < 55; ++i) y.push_back(rng.normal(0.3, 1.4));
        const double d2 = ks_two_sample(x, y, Alternative::two_sided).statistic;
        const double dg = ks_two_sample(x, y, Alternative::greater).statistic;
        const double dl = ks_two_sample(x, y, Alternative::less).statistic;
        CHECK(d2 == doctest::Approx(std::max(dg, dl)).epsilon(1e-12));
    }
}

TEST_CASE("p-value is monotone decreasing in D") {
    double prev = 1.1;
    for (double d : {0.05, 0.1, 0.15, 0.2, 0.3, 0.5}) {
        const double p = kolmogorov_p_value(d, 96, 96, Alternative::two_sided);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("paper Table 3 row 1 p-values reproduce") {
    // D = 0.2708 at n = m = 96.
    CHECK(kolmogorov_p_value(0.2708, 96, 96, Alternative::two_sided) ==
          doctest::Approx(0.0017).epsilon(0.05));
    CHECK(kolmogorov_p_value(0.2708, 96, 96, Alternative::less) ==
          doctest::Approx(0.0009).epsilon(0.06));
    CHECK(kolmogorov_p_value(0.0417, 96, 96, Alternative::greater) ==
          doctest::Approx(0.8465).epsilon(0.001));
}

TEST_CASE("pspdt critical values: standard and paper-compat coefficients") {
    // Standard: 1.3581 * sqrt(2/96) = 0.19604.
    CHECK(pspdt_critical_value(0.05, 96, 96, false) == doctest::Approx(0.196).epsilon(0.002));
    // Paper-printed constant: 0.5887 * sqrt(2/96).
    CHECK(pspdt_critical_value(0.05, 96, 96, true) == doctest::Approx(0.0850).epsilon(0.002));
    CHECK_THROWS_AS(pspdt_critical_value(1.5, 96, 96, false), std::domain_error);
}

TEST_CASE("pspdt: K = 1 statistic reduces to a plain two-sample KS draw") {
    const Distribution d1 = ExGaussianParams{78.4, 93.9, 73.1};
    const Distribution d2 =
        MixtureSsrt{0.59, ExGaussianParams{94.0, 134.5, 104.8}, ExGaussianParams{90.9, 142.3, 99.0}};
    PspdtConfig cfg;
    cfg.K = 1;
    cfg.n_null_reps = 0;
    cfg.seed = 99;
    const PspdtResult r = pspdt(d1, d2, cfg);
    REQUIRE(r.per_k.size() == 1);
    CHECK(r.d_bar == doctest::Approx(r.per_k[0]));

    Rng rng = Rng(99).split(0);
    const auto sx = dist_sample(d1, 96, rng);
    const auto sy = dist_sample(d2, 96, rng);
    CHECK(r.d_bar == doctest::Approx(ks_two_sample(sx, sy, Alternative::two_sided).statistic));
}

TEST_CASE("pspdt: identical distributions rarely reject") {
    const Distribution d = ExGaussianParams{78.4, 93.9, 73.1};
    int rejects = 0;
    const int runs = 40;
    for (int s = 0; s < runs; ++s) {
        PspdtConfig cfg;
        cfg.seed = 4000 + static_cast<std::uint64_t>(s);
        cfg.n_null_reps = 0;
        const PspdtResult r = pspdt(d, d, cfg);
        if (r.reject) ++rejects;
        CHECK(r.d_bar == doctest::Approx(mean_of(r.per_k)).epsilon(1e-12));
    }
    CHECK(rejects <= 2);
}

TEST_CASE("pspdt: Table 4 decision pattern") {
    const ExGaussianParams theta_s{78.4, 93.9, 73.1};
    const ExGaussianParams theta_a{94.0, 134.5, 104.8};
    const ExGaussianParams theta_b{90.9, 142.3, 99.0};
    const Distribution single = theta_s;
    const Distribution mixture = MixtureSsrt{0.59, theta_a, theta_b};

    PspdtConfig cfg;
    cfg.seed = 20250810;
    cfg.n_null_reps = 100;
    const PspdtResult sm = pspdt(single, mixture, cfg);
    CHECK(sm.reject);
    CHECK(sm.mc_p_value < 0.05);

    cfg.seed = 20250811;
    const PspdtResult ab = pspdt(Distribution{theta_b}, Distribution{theta_a}, cfg);
    CHECK_FALSE(ab.reject);
    CHECK(ab.mc_p_value > 0.05);
}

TEST_CASE("paired t-test: frozen worked example") {
    const std::vector<double> a{512, 480, 530, 470, 455};
    const std::vector<double> b{498, 472, 518, 475, 441};
    const PairedTResult r = paired_t_test(a, b);
    CHECK(r.mean_diff == doctest::Approx(8.6).epsilon(1e-12));
    CHECK(r.t_stat == doctest::Approx(2.407537797110173).epsilon(1e-10));
    CHECK(r.p_value == doctest::Approx(0.07375123616956551).epsilon(1e-8));
    CHECK(r.ci_lo == doctest::Approx(-1.31777904104).epsilon(1e-6));
    CHECK(r.ci_hi == doctest::Approx(18.517779041).epsilon(1e-6));
    CHECK(r.p_defined);
}

TEST_CASE("paired t-test: degenerate cases") {
    const std::vector<double> a{100, 110, 120};
    SUBCASE("identical vectors give zero difference and undefined p") {
        const PairedTResult r = paired_t_test(a, a);
        CHECK(r.mean_diff == doctest::Approx(0.0));
        CHECK_FALSE(r.p_defined);
    }
    SUBCASE("constant offset with no noise flags undefined p") {
        std::vector<double> b{110, 120, 130};
        const PairedTResult r = paired_t_test(b, a);
        CHECK(r.mean_diff == doctest::Approx(10.0));
        CHECK_FALSE(r.p_defined);
        CHECK(r.ci_lo == doctest::Approx(10.0));
    }
    SUBCASE("offset with shrinking noise drives p toward zero") {
        Rng rng(3);
        double prev_p = 1.0;
        for (double noise : {20.0, 5.0, 1.0}) {
            std::vector<double> x, y;
            for (int i = 0; i < 12; ++i) {
                const double base = 400.0 + 30.0 * i;
                y.push_back(base);
                x.push_back(base + 10.0 + rng.normal(0.0, noise));
            }
            const PairedTResult r = paired_t_test(x, y);
            CHECK(r.p_value < prev_p + 1e-9);
            prev_p = r.p_value;
        }
        CHECK(prev_p < 1e-6);
    }
}

TEST_CASE("alternative names round-trip") {
    for (Alternative a : {Alternative::two_sided, Alternative::greater, Alternative::less})
        CHECK(parse_alternative(alternative_name(a)) == a);
    CHECK_THROWS_AS(parse_alternative("sideways"), std::invalid_argument);
}

} // TEST_SUITE

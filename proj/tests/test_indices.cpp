#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ssrt/indices.hpp"
#include "ssrt/numerics.hpp"

using namespace ssrt;

namespace {

SstDataset fixed_session(const std::vector<double>& go_rts,
                         const std::vector<std::pair<double, bool>>& stops) {
    SstDataset d;
    int idx = 1;
    std::size_t g = 0, s = 0;
    // interleave: go, stop, go, stop... then the remainder
    while (g < go_rts.size() || s < stops.size()) {
        if (g < go_rts.size()) {
            Trial t;
            t.index = idx++;
            t.kind = TrialKind::go;
            t.rt_ms = go_rts[g++];
            d.trials.push_back(t);
        }
        if (s < stops.size()) {
            Trial t;
            t.index = idx++;
            t.kind = TrialKind::stop;
            t.ssd_ms = stops[s].first;
            t.inhibited = stops[s].second;
            if (!stops[s].second) t.rt_ms = 350.0;
            ++s;
            d.trials.push_back(t);
        }
    }
    d.meta.n_trials = static_cast<int>(d.trials.size());
    return d;
}

const ExGaussianParams kGo{400.0, 60.0, 80.0};

} // namespace

TEST_SUITE("indices") {

TEST_CASE("crude index on constant data") {
    const SstDataset d = fixed_session({500.0, 500.0, 500.0, 500.0},
                                       {{250.0, true}, {250.0, false}});
    CHECK(ssrt_crude(d) == doctest::Approx(250.0));
}

TEST_CASE("crude requires stop trials") {
    const SstDataset d = fixed_session({500.0, 480.0}, {});
    CHECK_THROWS_AS(ssrt_crude(d), std::domain_error);
}

TEST_CASE("Logan 1994: median case and deterministic go RTs") {
    // P(inhibit) = 1/2 with symmetric go RTs: quantile at 0.5 is the median.
    const SstDataset d = fixed_session({300.0, 400.0, 500.0, 600.0, 700.0},
                                       {{200.0, true}, {300.0, false}});
    CHECK(ssrt_logan1994(d) == doctest::Approx(500.0 - 250.0));

    const SstDataset flat = fixed_session({450.0, 450.0, 450.0, 450.0},
                                          {{100.0, true}, {200.0, false}});
    CHECK(ssrt_logan1994(flat) == doctest::Approx(450.0 - 150.0));
}

TEST_CASE("Logan 1994 undefined at inhibition proportion 0 or 1") {
    const SstDataset all_inhibit = fixed_session({500.0, 480.0}, {{250.0, true}, {250.0, true}});
    CHECK_THROWS_AS(ssrt_logan1994(all_inhibit), std::domain_error);
    const SstDataset none = fixed_session({500.0, 480.0}, {{250.0, false}, {250.0, false}});
    CHECK_THROWS_AS(ssrt_logan1994(none), std::domain_error);
}

TEST_CASE("crude and Logan recover a near-constant simulated SSRT") {
    // Stop process is nearly deterministic at 200 ms; expected SSRT about 201.
    const ExGaussianParams stop{200.0, 1.0, 1.0};
    SessionDesign design;
    design.n_trials = 9600;
    const SstDataset d = simulate_sst(kGo, stop, design, 8);
    CHECK(std::fabs(ssrt_crude(d) - 201.0) <= 15.0);
    CHECK(std::fabs(ssrt_logan1994(d) - 201.0) <= 15.0);
}

TEST_CASE("weighted report: identity, degenerate weight, and affine structure") {
    const ExGaussianParams stop{180.0, 40.0, 70.0};
    const SstDataset d = simulate_sst(kGo, stop, SessionDesign{}, 44);
    const ClusterPartition p = partition_clusters(d);
    const ConstantSsrtReport r = ssrt_weighted(d, p);
    CHECK(r.weighted_ms ==
          doctest::Approx(r.w_a * r.ssrt_a_ms + (1.0 - r.w_a) * r.ssrt_b_ms).epsilon(1e-12));
    CHECK(r.p_inhibit >= 0.0);
    CHECK(r.p_inhibit <= 1.0);
    CHECK(r.w_a == doctest::Approx(p.w_a));

    // All stops type A: weighted equals the A-cluster estimate. Two go
    // trials between stops keep the A cluster's own go set non-empty.
    SstDataset alt;
    int idx = 1;
    for (int i = 0; i < 24; ++i) {
        for (int rep = 0; rep < 2; ++rep) {
            Trial g;
            g.index = idx++;
            g.kind = TrialKind::go;
            g.rt_ms = 380.0 + 10.0 * i + rep;
            alt.trials.push_back(g);
        }
        Trial s;
        s.index = idx++;
        s.kind = TrialKind::stop;
        s.ssd_ms = 250.0;
        s.inhibited = (i % 2 == 0);
        if (!s.inhibited.value()) s.rt_ms = 360.0;
        alt.trials.push_back(s);
    }
    const ClusterPartition pa = partition_clusters(alt);
    REQUIRE(pa.w_a == 1.0);
    const ConstantSsrtReport ra = ssrt_weighted(alt, pa);
    CHECK(ra.weighted_ms == doctest::Approx(ra.ssrt_a_ms));
}

TEST_CASE("homogeneous clusters: weighted tracks Logan within sampling noise") {
    const ExGaussianParams stop{180.0, 40.0, 70.0};
    std::vector<double> diffs;
    for (int s = 0; s < 120; ++s) {
        SessionDesign design;
        design.n_trials = 480;
        const SstDataset d = simulate_sst(kGo, stop, design,
                                          7000 + static_cast<std::uint64_t>(s));
        const ClusterPartition p = partition_clusters(d);
        if (p.stop_a.empty() || p.stop_b.empty()) continue;
        const ConstantSsrtReport r = ssrt_weighted(d, p);
        // Views can have inhibition proportions of 0/1 on small B clusters.
        diffs.push_back(r.weighted_ms - r.logan1994_ms);
    }
    REQUIRE(diffs.size() > 60);
    const double m = mean_of(diffs);
    const double se = std::sqrt(variance_of(diffs) / static_cast<double>(diffs.size()));
    CHECK(std::fabs(m) <= 4.0 * se + 1.0);
}

TEST_CASE("weighted index is affine in the weight with slope ssrt_a - ssrt_b") {
    const ExGaussianParams stop{180.0, 40.0, 70.0};
    const SstDataset d = simulate_sst(kGo, stop, SessionDesign{}, 5150);
    const ClusterPartition p = partition_clusters(d);
    const ConstantSsrtReport r = ssrt_weighted(d, p);
    const double w2 = 0.3;
    const double expected = w2 * r.ssrt_a_ms + (1.0 - w2) * r.ssrt_b_ms;
    CHECK(expected == doctest::Approx(r.weighted_ms + (w2 - r.w_a) * (r.ssrt_a_ms - r.ssrt_b_ms))
                          .epsilon(1e-9));
}

namespace {

// Session whose processes depend on the previous trial type: both the go
// and stop processes are slower after a stop trial (the post-stop-slowing
// pattern behind the cluster partition). The library race simulator is
// deliberately homogeneous, so the heterogeneous generator lives here.
SstDataset heterogeneous_session(const ExGaussianParams& go_a, const ExGaussianParams& go_b,
                                 const ExGaussianParams& stop_a, const ExGaussianParams& stop_b,
                                 int n_trials, std::uint64_t seed) {
    Rng rng(seed);
    SstDataset d;
    double ssd = 250.0;
    bool prev_go = true;
    for (int i = 0; i < n_trials; ++i) {
        Trial t;
        t.index = i + 1;
        // Stops in consecutive pairs (25% overall) so both clusters fill:
        // the first of each pair is type A, the second type B.
        const int phase = i % 8;
        const bool is_stop = phase == 6 || phase == 7;
        const ExGaussianParams& go = prev_go ? go_a : go_b;
        if (!is_stop) {
            t.kind = TrialKind::go;
            t.rt_ms = rng.normal(go.mu, go.sigma) + rng.exponential(go.tau);
            prev_go = true;
        } else {
            const ExGaussianParams& stop = prev_go ? stop_a : stop_b;
            t.kind = TrialKind::stop;
            t.ssd_ms = ssd;
            const double gort = rng.normal(go.mu, go.sigma) + rng.exponential(go.tau);
            const double ssrt = rng.normal(stop.mu, stop.sigma) + rng.exponential(stop.tau);
            const bool responded = gort < ssd + ssrt;
            t.inhibited = !responded;
            if (responded) t.rt_ms = gort;
            ssd = std::max(0.0, ssd + (responded ? -50.0 : 50.0));
            prev_go = false;
        }
        d.trials.push_back(t);
    }
    d.meta.n_trials = n_trials;
    return d;
}

} // namespace

TEST_CASE("heterogeneous clusters reproduce weighted > Logan in nearly all sessions") {
    const ExGaussianParams go_a{380.0, 55.0, 70.0};
    const ExGaussianParams go_b{460.0, 70.0, 100.0}; // post-stop slowing
    const ExGaussianParams stop_a{160.0, 35.0, 60.0};
    const ExGaussianParams stop_b{280.0, 45.0, 110.0}; // slower after a stop
    int wins = 0, total = 0;
    for (int s = 0; s < 100; ++s) {
        const SstDataset d = heterogeneous_session(go_a, go_b, stop_a, stop_b, 960,
                                                   90000 + static_cast<std::uint64_t>(s));
        const ClusterPartition p = partition_clusters(d);
        if (p.stop_a.empty() || p.stop_b.empty()) continue;
        try {
            const ConstantSsrtReport r = ssrt_weighted(d, p);
            ++total;
            if (r.weighted_ms > r.logan1994_ms) ++wins;
        } catch (const std::domain_error&) {
            // degenerate inhibition proportion in a small cluster
        }
    }
    REQUIRE(total >= 80);
    CHECK(static_cast<double>(wins) / total >= 0.95);
}

} // TEST_SUITE

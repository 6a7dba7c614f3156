// Stop-signal-task session simulator under the independent horse race model
// with staircase SSD tracking, plus the previous-trial-type partition into
// type-A / type-B clusters.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssrt/exgauss.hpp"

namespace ssrt {

enum class TrialKind { go, stop };

struct Trial {
    int index = 0; // 1-based position within the session
    TrialKind kind = TrialKind::go;
    std::optional<double> ssd_ms;    // stop trials only
    std::optional<double> rt_ms;     // absent on successful inhibits
    std::optional<bool> inhibited;   // stop trials only

    bool consistent() const;
};

struct SessionDesign {
    int n_trials = 96;
    double stop_fraction = 0.25;
    double initial_ssd_ms = 250.0;
    double step_ms = 50.0; // 0 gives a constant-SSD (non-tracking) session
    int block_size = 24;
};

struct DatasetMeta {
    int n_trials = 0;
    double stop_fraction = 0.0;
    double initial_ssd_ms = 0.0;
    double step_ms = 0.0;
    std::uint64_t seed = 0;
};

struct SstDataset {
    std::vector<Trial> trials;
    DatasetMeta meta;

    int n_go() const;
    int n_stop() const;
    int n_inhibit() const;
    std::vector<double> go_rts() const;
    std::vector<double> stop_ssds() const;
    // Observed inhibition proportion among stop trials.
    double p_inhibit() const;
};

// Latent race draws, one entry per stop trial in session order; only filled
// when a trace is requested so production output keeps the censoring of real
// data.
struct SimTrace {
    std::vector<int> trial_index;
    std::vector<double> gort;
    std::vector<double> ssrt;
};

// Simulate a full session: stop trials are placed uniformly without
// replacement within each block (ceil(stop_fraction*block_size) per block),
// a stop trial is responded iff GORT < SSD + SSRT, and the SSD moves +step
// after a successful inhibit / -step after a failed one, clamped at 0.
SstDataset simulate_sst(const ExGaussianParams& go, const ExGaussianParams& stop,
                        const SessionDesign& design, std::uint64_t seed,
                        SimTrace* trace = nullptr);

struct ClusterPartition {
    std::vector<int> go_a, go_b, stop_a, stop_b; // 1-based trial indices
    double w_a = 0.0; // |stop_a| / (|stop_a| + |stop_b|)
};

// Trial i (i>=2) is type A iff trial i-1 is a go trial. Trial 1 has no
// predecessor and belongs to neither cluster. Requires at least one stop
// trial among trials 2..N so w_a is defined.
ClusterPartition partition_clusters(const SstDataset& d);

enum class ClusterType { S, A, B };

struct ClusterViews {
    SstDataset full;   // type-S: every trial
    SstDataset type_a;
    SstDataset type_b;
};

// Sub-datasets preserving trial order and per-trial SSDs.
ClusterViews extract_views(const SstDataset& d, const ClusterPartition& p);

const SstDataset& select_view(const ClusterViews& v, ClusterType c);
std::string cluster_name(ClusterType c);

} // namespace ssrt

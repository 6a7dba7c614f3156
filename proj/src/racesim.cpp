#include "ssrt/racesim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssrt {

bool Trial::consistent() const {
    if (kind == TrialKind::go)
        return rt_ms.has_value() && !ssd_ms.has_value() && !inhibited.has_value();
    return ssd_ms.has_value() && inhibited.has_value() &&
           (*inhibited ? !rt_ms.has_value() : rt_ms.has_value());
}

int SstDataset::n_go() const {
    return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const Trial& t) {
        return t.kind == TrialKind::go;
    }));
}

int SstDataset::n_stop() const { return static_cast<int>(trials.size()) - n_go(); }

int SstDataset::n_inhibit() const {
    return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const Trial& t) {
        return t.kind == TrialKind::stop && t.inhibited.value_or(false);
    }));
}

std::vector<double> SstDataset::go_rts() const {
    std::vector<double> out;
    for (const Trial& t : trials)
        if (t.kind == TrialKind::go && t.rt_ms) out.push_back(*t.rt_ms);
    return out;
}

std::vector<double> SstDataset::stop_ssds() const {
    std::vector<double> out;
    for (const Trial& t : trials)
        if (t.kind == TrialKind::stop && t.ssd_ms) out.push_back(*t.ssd_ms);
    return out;
}

double SstDataset::p_inhibit() const {
    const int s = n_stop();
    if (s == 0) throw std::domain_error("p_inhibit: dataset has no stop trials");
    return static_cast<double>(n_inhibit()) / static_cast<double>(s);
}

SstDataset simulate_sst(const ExGaussianParams& go, const ExGaussianParams& stop,
                        const SessionDesign& design, std::uint64_t seed, SimTrace* trace) {
    go.validate();
    stop.validate();
    if (design.n_trials <= 0 || design.block_size <= 0 ||
        design.n_trials % design.block_size != 0)
        throw std::invalid_argument("simulate_sst: n_trials must be a positive multiple of block_size");
    if (!(design.stop_fraction > 0.0 && design.stop_fraction < 1.0))
        throw std::invalid_argument("simulate_sst: stop_fraction must lie in (0,1)");
    if (design.initial_ssd_ms < 0.0 || design.step_ms < 0.0)
        throw std::invalid_argument("simulate_sst: SSD settings must be nonnegative");

    const int stops_per_block = static_cast<int>(
        std::ceil(design.stop_fraction * design.block_size));
    if (stops_per_block < 1 || stops_per_block >= design.block_size)
        throw std::invalid_argument("simulate_sst: degenerate stop-trial count per block");

    Rng rng(seed);
    Rng placement = rng.split(1);
    Rng race = rng.split(2);

    // Stop positions: choose stops_per_block slots per block without replacement.
    const int n_blocks = design.n_trials / design.block_size;
    std::vector<bool> is_stop(static_cast<std::size_t>(design.n_trials), false);
    std::vector<int> slots(static_cast<std::size_t>(design.block_size));
    for (int b = 0; b < n_blocks; ++b) {
        for (int i = 0; i < design.block_size; ++i) slots[static_cast<std::size_t>(i)] = i;
        // partial Fisher-Yates
        for (int i = 0; i < stops_per_block; ++i) {
            const auto j = i + static_cast<int>(placement.uniform_int(
                               static_cast<std::uint64_t>(design.block_size - i)));
            std::swap(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
            is_stop[static_cast<std::size_t>(b * design.block_size + slots[static_cast<std::size_t>(i)])] = true;
        }
    }

    SstDataset d;
    d.meta = DatasetMeta{design.n_trials, design.stop_fraction, design.initial_ssd_ms,
                         design.step_ms, seed};
    d.trials.reserve(static_cast<std::size_t>(design.n_trials));

    double ssd = design.initial_ssd_ms;
    for (int i = 0; i < design.n_trials; ++i) {
        Trial t;
        t.index = i + 1;
        if (!is_stop[static_cast<std::size_t>(i)]) {
            t.kind = TrialKind::go;
            t.rt_ms = race.normal(go.mu, go.sigma) + race.exponential(go.tau);
        } else {
            t.kind = TrialKind::stop;
            t.ssd_ms = ssd;
            const double gort = race.normal(go.mu, go.sigma) + race.exponential(go.tau);
            const double ssrt = race.normal(stop.mu, stop.sigma) + race.exponential(stop.tau);
            const bool responded = gort < ssd + ssrt;
            t.inhibited = !responded;
            if (responded) t.rt_ms = gort;
            if (trace) {
                trace->trial_index.push_back(t.index);
                trace->gort.push_back(gort);
                trace->ssrt.push_back(ssrt);
            }
            ssd = std::max(0.0, ssd + (responded ? -design.step_ms : design.step_ms));
        }
        d.trials.push_back(t);
    }
    return d;
}

ClusterPartition partition_clusters(const SstDataset& d) {
    ClusterPartition p;
    for (std::size_t i = 1; i < d.trials.size(); ++i) {
        const bool prev_go = d.trials[i - 1].kind == TrialKind::go;
        const Trial& t = d.trials[i];
        if (t.kind == TrialKind::go)
            (prev_go ? p.go_a : p.go_b).push_back(t.index);
        else
            (prev_go ? p.stop_a : p.stop_b).push_back(t.index);
    }
    const std::size_t n_stop = p.stop_a.size() + p.stop_b.size();
    if (n_stop == 0)
        throw std::domain_error("partition_clusters: no stop trials after trial 1, w_a undefined");
    p.w_a = static_cast<double>(p.stop_a.size()) / static_cast<double>(n_stop);
    return p;
}

namespace {

SstDataset subset(const SstDataset& d, const std::vector<int>& go_idx,
                  const std::vector<int>& stop_idx) {
    SstDataset out;
    out.meta = d.meta;
    std::vector<bool> keep(d.trials.size() + 1, false);
    for (int i : go_idx) keep[static_cast<std::size_t>(i)] = true;
    for (int i : stop_idx) keep[static_cast<std::size_t>(i)] = true;
    for (const Trial& t : d.trials)
        if (keep[static_cast<std::size_t>(t.index)]) out.trials.push_back(t);
    out.meta.n_trials = static_cast<int>(out.trials.size());
    return out;
}

} // namespace

ClusterViews extract_views(const SstDataset& d, const ClusterPartition& p) {
    ClusterViews v;
    v.full = d;
    v.type_a = subset(d, p.go_a, p.stop_a);
    v.type_b = subset(d, p.go_b, p.stop_b);
    return v;
}

const SstDataset& select_view(const ClusterViews& v, ClusterType c) {
    switch (c) {
        case ClusterType::S: return v.full;
        case ClusterType::A: return v.type_a;
        case ClusterType::B: return v.type_b;
    }
    throw std::logic_error("select_view: bad cluster");
}

std::string cluster_name(ClusterType c) {
    switch (c) {
        case ClusterType::S: return "S";
        case ClusterType::A: return "A";
        case ClusterType::B: return "B";
    }
    return "?";
}

} // namespace ssrt

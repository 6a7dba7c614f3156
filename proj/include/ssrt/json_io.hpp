// JSON bindings for the library's result types plus the versioned artifact
// envelope every CLI output is wrapped in.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ssrt/analysis.hpp"
#include "ssrt/bayesfit.hpp"
#include "ssrt/distribution.hpp"
#include "ssrt/indices.hpp"
#include "ssrt/sotest.hpp"
#include "ssrt/tsbpa.hpp"

namespace ssrt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

void to_json(json& j, const ExGaussianParams& p);
void from_json(const json& j, ExGaussianParams& p);
void to_json(json& j, const MixtureSsrt& m);
void from_json(const json& j, MixtureSsrt& m);

// Tagged form: {"family":"exgauss",...} or {"family":"mixture",...}.
json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const json& j);

void to_json(json& j, const ConstantSsrtReport& r);
void to_json(json& j, const ParamSummary& s);
void to_json(json& j, const KsResult& r);
void to_json(json& j, const PspdtResult& r);

json summary_to_json(const PosteriorSummary& s);
json posterior_to_json(const IbpaResult& r);
json stage2_to_json(const Stage2Posterior& s);
json sweep_to_json(const WeightSweep& s);
json partition_to_json(const ClusterPartition& p);

// Wraps a payload with schema version, software version, seed and the
// echoed run configuration; re-running the embedded config reproduces the
// artifact byte for byte.
json make_envelope(const std::string& subcommand, std::uint64_t seed, json config,
                   json payload);

// Serialize with a trailing newline, two-space indent, keys sorted (the
// library's deterministic default).
std::string dump_artifact(const json& j);

} // namespace ssrt

#include "ssrt/json_io.hpp"

#include <stdexcept>

namespace ssrt {

void to_json(json& j, const ExGaussianParams& p) {
    j = json{{"mu", p.mu}, {"sigma", p.sigma}, {"tau", p.tau}};
}

void from_json(const json& j, ExGaussianParams& p) {
    j.at("mu").get_to(p.mu);
    j.at("sigma").get_to(p.sigma);
    j.at("tau").get_to(p.tau);
    p.validate();
}

void to_json(json& j, const MixtureSsrt& m) {
    j = json{{"w_a", m.w_a}, {"theta_a", m.theta_a}, {"theta_b", m.theta_b}};
}

void from_json(const json& j, MixtureSsrt& m) {
    j.at("w_a").get_to(m.w_a);
    j.at("theta_a").get_to(m.theta_a);
    j.at("theta_b").get_to(m.theta_b);
    m.validate();
}

json distribution_to_json(const Distribution& d) {
    json j;
    if (const auto* e = std::get_if<ExGaussianParams>(&d)) {
        j = *e;
        j["family"] = "exgauss";
    } else {
        j = std::get<MixtureSsrt>(d);
        j["family"] = "mixture";
    }
    return j;
}

Distribution distribution_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "exgauss") return j.get<ExGaussianParams>();
    if (family == "mixture") return j.get<MixtureSsrt>();
    throw std::invalid_argument("unknown distribution family: " + family);
}

void to_json(json& j, const ConstantSsrtReport& r) {
    j = json{{"crude_ms", r.crude_ms},
             {"logan1994_ms", r.logan1994_ms},
             {"weighted_ms", r.weighted_ms},
             {"ssrt_a_ms", r.ssrt_a_ms},
             {"ssrt_b_ms", r.ssrt_b_ms},
             {"w_a", r.w_a},
             {"p_inhibit", r.p_inhibit},
             {"mean_ssd_ms", r.mean_ssd_ms}};
}

void to_json(json& j, const ParamSummary& s) {
    j = json{{"mean", s.mean}, {"sd", s.sd}, {"lo95", s.lo95}, {"hi95", s.hi95}};
}

void to_json(json& j, const KsResult& r) {
    j = json{{"statistic", r.statistic},
             {"p_value", r.p_value},
             {"alternative", alternative_name(r.alternative)},
             {"n", r.n},
             {"m", r.m}};
}

void to_json(json& j, const PspdtResult& r) {
    j = json{{"d_bar", r.d_bar},
             {"K", r.K},
             {"n", r.n},
             {"m", r.m},
             {"alpha", r.alpha},
             {"critical_value", r.critical_value},
             {"reject", r.reject},
             {"alternative", alternative_name(r.alternative)},
             {"mc_p_value", r.mc_p_value},
             {"per_k", r.per_k}};
}

json summary_to_json(const PosteriorSummary& s) {
    json j;
    for (int p = 0; p < kRaceDim; ++p)
        j[kRaceParamNames[static_cast<std::size_t>(p)]] = s.params[static_cast<std::size_t>(p)];
    return j;
}

json posterior_to_json(const IbpaResult& r) {
    json j;
    j["summary"] = summary_to_json(r.summary);
    j["n_iter"] = r.chains.n_iter;
    j["n_burn"] = r.chains.n_burn;
    j["n_chains"] = r.chains.chains.size();
    json rhat;
    for (int p = 0; p < kRaceDim; ++p)
        rhat[kRaceParamNames[static_cast<std::size_t>(p)]] = r.chains.rhat[static_cast<std::size_t>(p)];
    j["rhat"] = rhat;
    j["converged"] = r.chains.converged;
    j["warnings"] = r.chains.warnings;
    json acc = json::array();
    for (const ChainResult& c : r.chains.chains) acc.push_back(c.acceptance_rates);
    j["acceptance_rates"] = acc;
    return j;
}

json stage2_to_json(const Stage2Posterior& s) {
    json j;
    json params;
    for (int p = 0; p < kStage2Dim; ++p)
        params[kStage2ParamNames[static_cast<std::size_t>(p)]] = s.params[static_cast<std::size_t>(p)];
    j["params"] = params;
    j["overall_triple"] = {{"mu", s.overall_triple[0]},
                           {"sigma", s.overall_triple[1]},
                           {"tau", s.overall_triple[2]}};
    j["overall_triple_sd"] = {{"mu", s.overall_triple_sd[0]},
                              {"sigma", s.overall_triple_sd[1]},
                              {"tau", s.overall_triple_sd[2]}};
    j["implied_corr"] = {{"rho_mu_sigma", s.implied_corr[0]},
                         {"rho_mu_tau", s.implied_corr[1]},
                         {"rho_sigma_tau", s.implied_corr[2]}};
    json rhat;
    for (int p = 0; p < kStage2Dim; ++p)
        rhat[kStage2ParamNames[static_cast<std::size_t>(p)]] = s.rhat[static_cast<std::size_t>(p)];
    j["rhat"] = rhat;
    j["n_iter"] = s.n_iter;
    j["n_burn"] = s.n_burn;
    j["degenerate_data"] = s.degenerate_data;
    j["warnings"] = s.warnings;
    return j;
}

json sweep_to_json(const WeightSweep& s) {
    json j;
    j["mean_slope"] = s.mean_slope;
    j["mean_intercept"] = s.mean_intercept;
    j["var_quadratic"] = {{"a", s.var_a}, {"b", s.var_b}, {"c", s.var_c}};
    j["argmax_var_w"] = s.argmax_var_w;
    j["pspdt_cutoff"] = s.pspdt_cutoff;
    json points = json::array();
    for (const WeightSweepPoint& p : s.points)
        points.push_back(json{{"w", p.w},
                              {"delta_mean", p.delta_mean},
                              {"delta_var", p.delta_var},
                              {"pspdt_stat", p.pspdt_stat}});
    j["points"] = points;
    return j;
}

json partition_to_json(const ClusterPartition& p) {
    return json{{"go_a", p.go_a}, {"go_b", p.go_b},     {"stop_a", p.stop_a},
                {"stop_b", p.stop_b}, {"w_a", p.w_a}};
}

json make_envelope(const std::string& subcommand, std::uint64_t seed, json config,
                   json payload) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["software_version"] = kVersion;
    j["subcommand"] = subcommand;
    j["seed"] = seed;
    j["config"] = std::move(config);
    j["result"] = std::move(payload);
    return j;
}

std::string dump_artifact(const json& j) {
    // nlohmann objects already keep keys sorted; fixed indent keeps diffs and
    // determinism checks trivial.
    return j.dump(2) + "\n";
}

} // namespace ssrt

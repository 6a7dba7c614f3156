#include "ssrt/distribution.hpp"

namespace ssrt {

double dist_pdf(const Distribution& d, double t) {
    return std::visit([t](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExGaussianParams>) return exg_pdf(v, t);
        else return mixture_pdf(v, t);
    }, d);
}

double dist_cdf(const Distribution& d, double t) {
    return std::visit([t](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExGaussianParams>) return exg_cdf(v, t);
        else return mixture_cdf(v, t);
    }, d);
}

double dist_mean(const Distribution& d) {
    return std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExGaussianParams>) return exg_moments(v).m1;
        else return mixture_moments(v).m1;
    }, d);
}

double dist_variance(const Distribution& d) {
    return std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExGaussianParams>) return exg_shape(v).variance;
        else return mixture_shape(v).variance;
    }, d);
}

std::vector<double> dist_sample(const Distribution& d, std::size_t n, Rng& rng) {
    return std::visit([n, &rng](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExGaussianParams>) return exg_sample(v, n, rng);
        else return mixture_sample(v, n, rng);
    }, d);
}

} // namespace ssrt

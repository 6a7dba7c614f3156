// Thin adaptive Gauss-Kronrod wrapper (15-point rule) used by the censored
// likelihood and the nonparametric retrieval identities.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ssrt {

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Integrates f over [a,b]; throws NumericalError with diagnostics when the
// requested tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 1e-12, double epsrel = 1e-8);

} // namespace ssrt

#include "ssrt/quadrature.hpp"

#include <memory>
#include <sstream>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace ssrt {

namespace {

constexpr std::size_t kWorkspaceLimit = 2000;

// One workspace per thread; GSL's qag is reentrant as long as workspaces are
// not shared.
gsl_integration_workspace* workspace() {
    thread_local std::unique_ptr<gsl_integration_workspace,
                                 decltype(&gsl_integration_workspace_free)>
        ws(gsl_integration_workspace_alloc(kWorkspaceLimit), &gsl_integration_workspace_free);
    return ws.get();
}

double call_target(double x, void* params) {
    const auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

const bool kHandlerOff = [] {
    gsl_set_error_handler_off();
    return true;
}();

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs, double epsrel) {
    (void)kHandlerOff;
    gsl_function gf;
    gf.function = &call_target;
    gf.params = const_cast<void*>(static_cast<const void*>(&f));

    double result = 0.0, abserr = 0.0;
    const int status = gsl_integration_qag(&gf, a, b, epsabs, epsrel, kWorkspaceLimit,
                                           GSL_INTEG_GAUSS15, workspace(), &result, &abserr);
    // GSL_EROUND on an already-converged estimate is benign; anything else is
    // a genuine failure worth surfacing with its context.
    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        std::ostringstream msg;
        msg << "quadrature failed on [" << a << "," << b << "]: " << gsl_strerror(status)
            << " (estimate " << result << ", abserr " << abserr << ")";
        throw NumericalError(msg.str());
    }
    return result;
}

} // namespace ssrt

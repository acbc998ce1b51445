#pragma once

#include <complex>
#include <functional>

namespace phonsim::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Deterministic: intervals are
// split worst-first until the summed error estimate meets the tolerances.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-10,
                 int max_intervals = 4000);

// Same, raising NumericalError with diagnostics when not converged.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10,
                          int max_intervals = 4000, const char* label = "integrand");

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b,
                                       double abs_tol = 1e-12, double rel_tol = 1e-10,
                                       int max_intervals = 4000,
                                       const char* label = "integrand");

}  // namespace phonsim::quad

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace welltime::quad {

struct QuadSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;

    void validate() const;
};

template <typename T>
struct BasicQuadResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

using QuadResult = BasicQuadResult<double>;
using ComplexQuadResult = BasicQuadResult<std::complex<double>>;

/// Raised when the panel budget runs out before the tolerance is met.
/// Carries the best estimate obtained so far.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, std::complex<double> best, double err)
        : std::runtime_error(what), best_value(best), best_error(err) {}

    std::complex<double> best_value;
    double best_error;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;
using ContourFn = std::function<std::complex<double>(std::complex<double>)>;

// Globally adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadResult integrate_adaptive(const RealFn& f, double lo, double hi, const QuadSpec& spec);
ComplexQuadResult integrate_adaptive(const ComplexFn& f, double lo, double hi, const QuadSpec& spec);

// int_0^kappa f(k)/sqrt(kappa^2-k^2) dk via k = kappa*sin(theta); the
// substitution removes the endpoint singularity exactly.
QuadResult integrate_sqrt_singular(const RealFn& f, double kappa, const QuadSpec& spec);

// int_0^inf f dk for integrands bounded by a Gaussian envelope around
// `center` of width `sigma_eff`.  Truncates at max(0,center) + n*sigma_eff
// with n picked so the discarded analytic tail bound stays below abs_tol/10;
// the bound is added to the reported error estimate.
QuadResult integrate_gaussian_tail(const RealFn& f, double center, double sigma_eff,
                                   const QuadSpec& spec);

/// Straight-line contour integral of g along z(t) = z_start + t (z_end - z_start).
ComplexQuadResult integrate_contour_segment(const ContourFn& g, std::complex<double> z_start,
                                            std::complex<double> z_end, const QuadSpec& spec);

} // namespace welltime::quad

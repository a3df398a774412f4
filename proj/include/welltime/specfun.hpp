#pragma once

#include <complex>
#include <utility>

namespace welltime::specfun {

/// Convergence control for the power-series evaluators.
struct SeriesControl {
    int max_terms = 400;
    double rel_tol = 1e-15;
};

// Modified Bessel function I0(x).  Power series for |x| <= 18, Hankel-type
// asymptotic expansion beyond.  Throws std::range_error once e^{|x|} is no
// longer representable; use bessel_i0_scaled there instead.
double bessel_i0(double x, const SeriesControl& ctl = {});

/// e^{-|x|} I0(x); finite for every finite x.
double bessel_i0_scaled(double x, const SeriesControl& ctl = {});

// I0 on complex arguments via the Maclaurin series.  Intended for moderate
// |z| (contour tests); cancellation grows like e^{2|Im z|}.
std::complex<double> bessel_i0_complex(std::complex<double> z, const SeriesControl& ctl = {});

double bessel_i1(double x, const SeriesControl& ctl = {});
double bessel_i1_scaled(double x, const SeriesControl& ctl = {});

/// Bessel function J0(x): Maclaurin series up to |x|=17, Hankel asymptotics beyond.
double bessel_j0(double x, const SeriesControl& ctl = {});

/// Dawson integral F(x) = e^{-x^2} int_0^x e^{t^2} dt.
double dawson(double x);

// Imaginary error function erfi(x) = (2/sqrt(pi)) int_0^x e^{t^2} dt.
// Overflows for |x| > ~26.6; throws std::range_error there.
double erfi(double x);

/// (log|erfi(x)|, sign) pair; finite for any finite x != 0.
std::pair<double, double> erfi_log(double x);

// Struve H0, modified Struve L0 and L1 for x >= 0.
// Power series with an asymptotic switchover (H0 at x>16, L0/L1 at x>40).
double struve_h0(double x, const SeriesControl& ctl = {});
double struve_l0(double x, const SeriesControl& ctl = {});
double struve_l1(double x, const SeriesControl& ctl = {});

/// 0F1(;1;z) = I0(2*sqrt(z)) for z >= 0, J0(2*sqrt(-z)) for z < 0.
double hyp0f1_1(double z, const SeriesControl& ctl = {});

// csgn(z): sign of Re z; sign of Im z when Re z == 0; 0 at the origin.
int csgn(std::complex<double> z);

namespace detail {
/// Y0 via Hankel asymptotics; valid only for x >= 16 (enough for struve_h0).
double bessel_y0_asymptotic(double x);
}

} // namespace welltime::specfun

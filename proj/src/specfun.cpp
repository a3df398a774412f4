#include "welltime/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace welltime::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogDblMax = 709.0;

// Hankel coefficients b_k = ((2k-1)!!)^2 / (8^k k!), shared by the I0/J0/Y0
// asymptotic expansions.  b_k = b_{k-1} * (2k-1)^2 / (8k).
double hankel_b(int k, double prev)
{
    const double m = 2.0 * k - 1.0;
    return prev * m * m / (8.0 * k);
}

// Asymptotic tail of e^{-x} I0(x) for x > 18: (2*pi*x)^{-1/2} sum b_k / x^k.
// The series is divergent; truncate at the smallest term.
double i0e_asymptotic(double x)
{
    double sum = 1.0;
    double term = 1.0;
    double prev_mag = 1.0;
    for (int k = 1; k <= 30; ++k) {
        term = hankel_b(k, term);
        const double t = term / std::pow(x, k);
        if (std::abs(t) >= prev_mag)
            break;
        sum += t;
        prev_mag = std::abs(t);
        if (std::abs(t) < 1e-18 * sum)
            break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

double i1e_asymptotic(double x)
{
    // I1 ~ e^x (2 pi x)^{-1/2} [1 - 3/(8x) - 15/(2!(8x)^2) - ...];
    // a_k = a_{k-1} * (4 - (2k-1)^2) / (8k) with a_0 = 1 gives the signs.
    double sum = 1.0;
    double term = 1.0;
    double prev_mag = 1.0;
    for (int k = 1; k <= 30; ++k) {
        const double m = 2.0 * k - 1.0;
        term *= (4.0 - m * m) / (8.0 * k);
        const double t = term / std::pow(x, k);
        if (std::abs(t) >= prev_mag)
            break;
        sum += t;
        prev_mag = std::abs(t);
        if (std::abs(t) < 1e-18 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

double i0_series(double x, const SeriesControl& ctl)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= ctl.max_terms; ++n) {
        term *= q / (static_cast<double>(n) * n);
        sum += term;
        if (term < ctl.rel_tol * sum)
            break;
    }
    return sum;
}

double i1_series(double x, const SeriesControl& ctl)
{
    // I1(x) = (x/2) sum_{n>=0} (x^2/4)^n / (n! (n+1)!)
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= ctl.max_terms; ++n) {
        term *= q / (static_cast<double>(n) * (n + 1.0));
        sum += term;
        if (term < ctl.rel_tol * sum)
            break;
    }
    return 0.5 * x * sum;
}

long double j0_series(double x, const SeriesControl& ctl)
{
    // Long double accumulation: the alternating terms reach ~1e6 at x=17.
    const long double q = 0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int n = 1; n <= ctl.max_terms; ++n) {
        term *= -q / (static_cast<long double>(n) * n);
        sum += term;
        if (std::abs(term) < 1e-19L * std::abs(sum) && n > 4)
            break;
    }
    return sum;
}

struct HankelPQ {
    double p; // 1 - b2/x^2 + b4/x^4 - ...
    double q; // b1/x - b3/x^3 + ...
};

HankelPQ hankel_pq(double x)
{
    HankelPQ r{1.0, 0.0};
    double b = 1.0;
    double sign = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    for (int k = 1; k <= 24; ++k) {
        b = hankel_b(k, b);
        const double t = b / std::pow(x, k);
        if (t >= prev_mag)
            break;
        prev_mag = t;
        if (k % 2 == 1) {
            r.q += sign * t;
            sign = -sign; // flips after each odd/even pair
        } else {
            r.p += sign * t;
        }
        if (t < 1e-18)
            break;
    }
    return r;
}

} // namespace

double bessel_i0_scaled(double x, const SeriesControl& ctl)
{
    x = std::abs(x);
    if (x <= 18.0)
        return i0_series(x, ctl) * std::exp(-x);
    return i0e_asymptotic(x);
}

double bessel_i0(double x, const SeriesControl& ctl)
{
    x = std::abs(x);
    if (x <= 18.0)
        return i0_series(x, ctl);
    if (x > kLogDblMax)
        throw std::range_error("bessel_i0: e^x overflows at x=" + std::to_string(x) +
                               "; use bessel_i0_scaled");
    return std::exp(x) * i0e_asymptotic(x);
}

std::complex<double> bessel_i0_complex(std::complex<double> z, const SeriesControl& ctl)
{
    const std::complex<double> q = 0.25 * z * z;
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    for (int n = 1; n <= ctl.max_terms; ++n) {
        term *= q / (static_cast<double>(n) * static_cast<double>(n));
        sum += term;
        if (std::abs(term) < ctl.rel_tol * std::abs(sum) && n > 4)
            break;
    }
    return sum;
}

double bessel_i1_scaled(double x, const SeriesControl& ctl)
{
    const double ax = std::abs(x);
    const double s = x < 0 ? -1.0 : 1.0;
    if (ax <= 18.0)
        return s * i1_series(ax, ctl) * std::exp(-ax);
    return s * i1e_asymptotic(ax);
}

double bessel_i1(double x, const SeriesControl& ctl)
{
    const double ax = std::abs(x);
    if (ax > kLogDblMax)
        throw std::range_error("bessel_i1: e^x overflows; use bessel_i1_scaled");
    if (ax <= 18.0)
        return (x < 0 ? -1.0 : 1.0) * i1_series(ax, ctl);
    return bessel_i1_scaled(x, ctl) * std::exp(ax);
}

double bessel_j0(double x, const SeriesControl& ctl)
{
    x = std::abs(x);
    if (x <= 17.0)
        return static_cast<double>(j0_series(x, ctl));
    const HankelPQ pq = hankel_pq(x);
    const double chi = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::cos(chi) - pq.q * std::sin(chi));
}

double detail::bessel_y0_asymptotic(double x)
{
    const HankelPQ pq = hankel_pq(x);
    const double chi = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::sin(chi) + pq.q * std::cos(chi));
}

double dawson(double x)
{
    const double ax = std::abs(x);
    const double s = x < 0 ? -1.0 : 1.0;
    if (ax <= 1.0) {
        // F(x) = sum (-1)^n (2x^2)^n x / (2n+1)!!
        const double q = 2.0 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int n = 1; n <= 60; ++n) {
            term *= -q / (2.0 * n + 1.0);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum))
                break;
        }
        return x * sum;
    }
    if (ax <= 8.0) {
        // Rybicki's sampling formula, F(x) ~ (1/sqrt(pi)) sum_{n odd} e^{-(x-nh)^2}/n.
        // Discretization error is O(e^{-(pi/2h)^2}) ~ 2e-27 at h=0.2.
        const double h = 0.2;
        const int n0 = static_cast<int>(ax / h);
        double sum = 0.0;
        for (int n = n0 - 47; n <= n0 + 47; ++n) {
            if (n % 2 == 0)
                continue;
            const double d = ax - n * h;
            if (std::abs(d) > 9.5)
                continue;
            sum += std::exp(-d * d) / n;
        }
        return s * sum / std::sqrt(kPi);
    }
    // Asymptotic: F(x) = 1/(2x) (1 + 1/(2x^2) + 3/(4x^4) + ...), terms
    // multiply by (2k-1)/(2x^2).
    const double q = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (2.0 * k - 1.0) / q;
        if (std::abs(term) >= prev)
            break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-18 * sum)
            break;
    }
    return sum / (2.0 * x);
}

double erfi(double x)
{
    if (x * x > kLogDblMax)
        throw std::range_error("erfi: overflow at |x|=" + std::to_string(std::abs(x)) +
                               "; use erfi_log");
    return (2.0 / std::sqrt(kPi)) * std::exp(x * x) * dawson(x);
}

std::pair<double, double> erfi_log(double x)
{
    if (x == 0.0)
        return {-std::numeric_limits<double>::infinity(), 0.0};
    const double f = dawson(std::abs(x));
    const double lg = x * x + std::log(2.0 * f / std::sqrt(kPi));
    return {lg, x < 0 ? -1.0 : 1.0};
}

namespace {

// Shared series skeleton for H0/L0: sum_m s^m (x/2)^{2m+1} / Gamma(m+3/2)^2
// with s = -1 for H0, +1 for L0.  t_0 = 2x/pi, ratio s*(x/2)^2/(m+1/2)^2.
long double struve0_series(double x, double sgn, const SeriesControl& ctl)
{
    const long double q = 0.25L * static_cast<long double>(x) * x;
    long double term = 2.0L * x / kPi;
    long double sum = term;
    for (int m = 1; m <= ctl.max_terms; ++m) {
        const long double half = m + 0.5L;
        term *= sgn * q / (half * half);
        sum += term;
        if (std::abs(term) < 1e-19L * std::abs(sum))
            break;
    }
    return sum;
}

// Correction series sum (+-1)^k ((2k-1)!!)^2 / x^{2k} used by the large-x
// Struve forms; truncated at the smallest term.
double struve_tail(double x, double sgn)
{
    const double q = x * x;
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 20; ++k) {
        const double m = 2.0 * k - 1.0;
        term *= sgn * m * m / q;
        if (std::abs(term) >= prev)
            break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum;
}

} // namespace

double struve_h0(double x, const SeriesControl& ctl)
{
    if (x < 0.0)
        throw std::domain_error("struve_h0: x must be >= 0");
    if (x <= 16.0)
        return static_cast<double>(struve0_series(x, -1.0, ctl));
    // H0(x) = Y0(x) + (2/(pi x)) [1 - 1/x^2 + 9/x^4 - ...]
    return detail::bessel_y0_asymptotic(x) + 2.0 / (kPi * x) * struve_tail(x, -1.0);
}

double struve_l0(double x, const SeriesControl& ctl)
{
    if (x < 0.0)
        throw std::domain_error("struve_l0: x must be >= 0");
    if (x <= 40.0)
        return static_cast<double>(struve0_series(x, 1.0, ctl));
    // L0(x) = I0(x) - (2/(pi x)) [1 + 1/x^2 + 9/x^4 + ...]
    return bessel_i0(x, ctl) - 2.0 / (kPi * x) * struve_tail(x, 1.0);
}

double struve_l1(double x, const SeriesControl& ctl)
{
    if (x < 0.0)
        throw std::domain_error("struve_l1: x must be >= 0");
    if (x <= 40.0) {
        // sum_m (x/2)^{2m+2} / (Gamma(m+3/2) Gamma(m+5/2)), t_0 = 2x^2/(3 pi).
        const long double q = 0.25L * static_cast<long double>(x) * x;
        long double term = 2.0L * x * x / (3.0L * kPi);
        long double sum = term;
        for (int m = 1; m <= ctl.max_terms; ++m) {
            term *= q / ((m + 0.5L) * (m + 1.5L));
            sum += term;
            if (term < 1e-19L * sum)
                break;
        }
        return static_cast<double>(sum);
    }
    // L1(x) = I1(x) - 2/pi + 2/(pi x^2) + ... ; the constant is already
    // ~1e-16 of I1 here, higher corrections are irrelevant.
    return bessel_i1(x, ctl) - 2.0 / kPi + 2.0 / (kPi * x * x);
}

double hyp0f1_1(double z, const SeriesControl& ctl)
{
    if (z >= 0.0)
        return bessel_i0(2.0 * std::sqrt(z), ctl);
    return bessel_j0(2.0 * std::sqrt(-z), ctl);
}

int csgn(std::complex<double> z)
{
    if (z.real() > 0.0)
        return 1;
    if (z.real() < 0.0)
        return -1;
    if (z.imag() > 0.0)
        return 1;
    if (z.imag() < 0.0)
        return -1;
    return 0;
}

} // namespace welltime::specfun

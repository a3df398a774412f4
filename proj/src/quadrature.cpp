#include "welltime/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace welltime::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;

// QUADPACK dqk15 abscissae/weights on [-1,1]; Gauss-7 nodes sit at the odd
// Kronrod indices.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
    double lo, hi;
    T value;
    double error;
};

template <typename T>
struct PanelOrder {
    bool operator()(const Panel<T>& a, const Panel<T>& b) const { return a.error < b.error; }
};

// One (G7,K15) application; error estimate follows the QUADPACK recipe.
template <typename T, typename F>
Panel<T> kronrod_panel(const F& f, double lo, double hi, long& evals)
{
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    T fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    evals += 15;

    T resk{};
    T resg{};
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    resk += kWgk[7] * fv[7];
    resabs += kWgk[7] * std::abs(fv[7]);
    for (int i = 0; i < 3; ++i)
        resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += kWg[3] * fv[7];

    const T mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

    resabs *= h;
    resasc *= h;
    double err = std::abs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, round_floor);

    return Panel<T>{lo, hi, resk * h, err};
}

template <typename T, typename F>
BasicQuadResult<T> adaptive_impl(const F& f, double lo, double hi, const QuadSpec& spec)
{
    spec.validate();
    if (!(lo < hi))
        throw std::invalid_argument("integrate_adaptive: requires lo < hi");

    long evals = 0;
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelOrder<T>> panels;
    panels.push(kronrod_panel<T>(f, lo, hi, evals));

    T total = panels.top().value;
    double total_err = panels.top().error;
    double frozen_err = 0.0; // panels narrowed to machine width

    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (splits >= spec.max_subdivisions || panels.empty()) {
            throw accuracy_error(
                "integrate_adaptive: tolerance not reached after " +
                    std::to_string(splits) + " subdivisions (err=" + std::to_string(total_err) + ")",
                std::complex<double>(total), total_err);
        }
        Panel<T> worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            frozen_err += worst.error;
            if (frozen_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
                throw accuracy_error("integrate_adaptive: interval exhausted to machine width",
                                     std::complex<double>(total), total_err);
            continue;
        }
        Panel<T> left = kronrod_panel<T>(f, worst.lo, mid, evals);
        Panel<T> right = kronrod_panel<T>(f, mid, worst.hi, evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++splits;
    }

    return BasicQuadResult<T>{total, total_err, evals};
}

} // namespace

void QuadSpec::validate() const
{
    if (!(abs_tol > 0.0) || abs_tol > 1e-3 || !(rel_tol > 0.0) || rel_tol > 1e-3)
        throw std::invalid_argument("QuadSpec: tolerances must lie in (0, 1e-3]");
    if (max_subdivisions < 32)
        throw std::invalid_argument("QuadSpec: max_subdivisions must be >= 32");
}

QuadResult integrate_adaptive(const RealFn& f, double lo, double hi, const QuadSpec& spec)
{
    return adaptive_impl<double>(f, lo, hi, spec);
}

ComplexQuadResult integrate_adaptive(const ComplexFn& f, double lo, double hi,
                                     const QuadSpec& spec)
{
    return adaptive_impl<std::complex<double>>(f, lo, hi, spec);
}

QuadResult integrate_sqrt_singular(const RealFn& f, double kappa, const QuadSpec& spec)
{
    if (!(kappa > 0.0))
        throw std::invalid_argument("integrate_sqrt_singular: kappa must be > 0");
    return adaptive_impl<double>([&](double theta) { return f(kappa * std::sin(theta)); },
                                 0.0, 0.5 * kPi, spec);
}

QuadResult integrate_gaussian_tail(const RealFn& f, double center, double sigma_eff,
                                   const QuadSpec& spec)
{
    if (!(sigma_eff > 0.0))
        throw std::invalid_argument("integrate_gaussian_tail: sigma_eff must be > 0");
    spec.validate();

    const double core = std::max(0.0, center);

    // Envelope amplitude probes: f evaluated where the Gaussian bound is tight.
    double amp = 0.0;
    for (double p : {core, core + sigma_eff, core + 2.0 * sigma_eff, 0.5 * core}) {
        const double d = (p - center) / sigma_eff;
        const double damp = std::exp(std::min(0.5 * d * d, 60.0));
        amp = std::max(amp, std::abs(f(p)) * damp);
    }
    amp = std::max(amp, 1e-300);

    // Discarded tail <= amp * sigma * e^{-n^2/2}/n; grow n until below abs_tol/10.
    double n_sigma = 6.0;
    double tail_bound;
    for (;;) {
        tail_bound = amp * sigma_eff * std::exp(-0.5 * n_sigma * n_sigma) / n_sigma;
        if (tail_bound <= 0.1 * spec.abs_tol || n_sigma >= 40.0)
            break;
        n_sigma += 1.0;
    }

    const double hi = core + n_sigma * sigma_eff;
    QuadResult r = adaptive_impl<double>(f, 0.0, hi, spec);
    r.error_estimate += tail_bound;
    return r;
}

ComplexQuadResult integrate_contour_segment(const ContourFn& g, std::complex<double> z_start,
                                            std::complex<double> z_end, const QuadSpec& spec)
{
    const std::complex<double> dz = z_end - z_start;
    return adaptive_impl<std::complex<double>>(
        [&](double t) { return g(z_start + t * dz) * dz; }, 0.0, 1.0, spec);
}

} // namespace welltime::quad

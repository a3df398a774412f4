#include "welltime/refraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "welltime/specfun.hpp"

namespace welltime::refraction {

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);

// zeta range covering the integrand support: the scaled envelope
// Phi(zeta) e^{kappa zeta} peaks at 4 sigma^2 kappa with width ~2 sigma.
double zeta_cutoff(double sigma_pos, double kappa)
{
    return 4.0 * sigma_pos * sigma_pos * kappa + 20.0 * sigma_pos;
}

double position_width(const PacketSpectrum& s)
{
    return 0.5 / s.envelope_sigma();
}

} // namespace

quad::QuadResult free_q(const PacketSpectrum& s, double k0, const quad::QuadSpec& spec)
{
    if (!(k0 > 0.0))
        throw std::domain_error("free_q: k0 must be > 0");
    const double zmax = zeta_cutoff(position_width(s), 0.0);
    auto integrand = [&](double zeta) {
        return s.autocorrelation(zeta) * std::exp(kI * (k0 * zeta));
    };
    const quad::ComplexQuadResult r = quad::integrate_adaptive(integrand, 0.0, zmax, spec);
    return {k0 * r.value.imag(), k0 * r.error_estimate, r.evaluations};
}

double free_q_closed(const GaussianPacket& p)
{
    // sqrt(2 pi) k0 s e^{-2 k0^2 s^2} erfi(sqrt(2) k0 s) == 2 sqrt(2) k0 s F(sqrt(2) k0 s)
    // with F the Dawson integral; this form never overflows.
    const double x = std::sqrt(2.0) * p.k0() * p.sigma();
    return 2.0 * std::sqrt(2.0) * p.k0() * p.sigma() * specfun::dawson(x);
}

double free_q_momentum_space(const PacketSpectrum& s, double k0, const quad::QuadSpec& spec)
{
    if (!(k0 > 0.0))
        throw std::domain_error("free_q_momentum_space: k0 must be > 0");
    auto integrand = [&](double k) {
        return (s.momentum_density(k) - s.momentum_density(-k)) / k;
    };
    const quad::QuadResult r =
        quad::integrate_gaussian_tail(integrand, s.envelope_center(), s.envelope_sigma(), spec);
    return k0 * r.value;
}

RefractionResult well_refraction(const PacketSpectrum& s, double k0, double kappa,
                                 const quad::QuadSpec& spec)
{
    if (!(k0 > 0.0) || kappa < 0.0)
        throw std::domain_error("well_refraction: requires k0 > 0 and kappa >= 0");
    if (!s.is_entire())
        throw std::invalid_argument("well_refraction: spectrum must be entire "
                                    "(pole residues are out of scope)");

    RefractionResult out;
    out.method = RefractionMethod::MomentumSpace;

    const quad::QuadResult q = free_q(s, k0, spec);
    out.q_free = q.value;

    if (kappa == 0.0) {
        // Exact routing: the well term is empty and the +-momentum integrals
        // only converge combined, which is precisely Q.
        out.r_plus = q.value;
        out.total = q.value;
        out.error_estimate = q.error_estimate;
        return out;
    }

    const double center = s.envelope_center();
    const double width = s.envelope_sigma();

    const quad::QuadResult plus = quad::integrate_gaussian_tail(
        [&](double k) { return s.momentum_density(k) / std::sqrt(k * k + kappa * kappa); },
        center, width, spec);
    const quad::QuadResult minus = quad::integrate_gaussian_tail(
        [&](double k) { return s.momentum_density(-k) / std::sqrt(k * k + kappa * kappa); },
        -center, width, spec);
    const quad::QuadResult inwell = quad::integrate_sqrt_singular(
        [&](double k) { return s.imag_axis_weight(k); }, kappa, spec);

    out.r_plus = k0 * plus.value;
    out.r_minus = -k0 * minus.value;
    out.r_kappa = k0 * inwell.value;
    out.total = out.r_plus + out.r_minus + out.r_kappa;
    out.error_estimate =
        k0 * (plus.error_estimate + minus.error_estimate + inwell.error_estimate);
    return out;
}

double zeta_oracle_refraction(const PacketSpectrum& s, double k0, double kappa,
                              const quad::QuadSpec& spec)
{
    if (!(k0 > 0.0) || kappa < 0.0)
        throw std::domain_error("zeta_oracle_refraction: requires k0 > 0 and kappa >= 0");

    const double sigma_pos = position_width(s);
    const double zmax = zeta_cutoff(sigma_pos, kappa);

    // Overflow guard: scan the scaled envelope; deep-well inputs must go
    // through the momentum-space route instead.
    for (int i = 0; i <= 64; ++i) {
        const double zeta = zmax * i / 64.0;
        const double mag = std::abs(s.autocorrelation_scaled(zeta, kappa * zeta));
        if (!std::isfinite(mag) || mag > 1e120)
            throw std::range_error(
                "zeta_oracle_refraction: e^{kappa zeta} Phi(zeta) exceeds the safe range "
                "(sigma*kappa too large); use well_refraction");
    }

    auto integrand = [&](double zeta) {
        return s.autocorrelation_scaled(zeta, kappa * zeta) *
               specfun::bessel_i0_scaled(kappa * zeta) * std::exp(kI * (k0 * zeta));
    };
    const quad::ComplexQuadResult r = quad::integrate_adaptive(integrand, 0.0, zmax, spec);
    return k0 * r.value.imag();
}

double barrier_refraction(const PacketSpectrum& s, double k0, double kappa0,
                          const quad::QuadSpec& spec)
{
    if (!(k0 > 0.0) || kappa0 < 0.0)
        throw std::domain_error("barrier_refraction: requires k0 > 0 and kappa0 >= 0");
    if (kappa0 == 0.0)
        return free_q(s, k0, spec).value;

    // k = kappa0 cosh(u) absorbs the endpoint singularity:
    // int_{kappa0}^inf f(k)/sqrt(k^2-kappa0^2) dk = int_0^umax f(kappa0 cosh u) du.
    const double kmax =
        std::max(kappa0 * (1.0 + 1e-12),
                 std::max(kappa0, s.envelope_center()) + 14.0 * s.envelope_sigma());
    const double umax = std::acosh(kmax / kappa0);
    auto integrand = [&](double u) {
        const double k = kappa0 * std::cosh(u);
        return s.momentum_density(k) - s.momentum_density(-k);
    };
    const quad::QuadResult r = quad::integrate_adaptive(integrand, 0.0, umax, spec);
    return k0 * r.value;
}

namespace {

quad::ComplexQuadResult deep_well_z_raw(double u, double v, const quad::QuadSpec& spec)
{
    // t = s^2 removes the 1/sqrt(t) endpoint:
    // z = e^{4iuv} int_0^inf 2i e^{-2(s^4+2v s^2)} e^{4iu s^2} / sqrt(s^2-2iu) ds.
    auto integrand = [&](double s) {
        const double s2 = s * s;
        return 2.0 * kI * std::exp(std::complex<double>(-2.0 * (s2 * s2 + 2.0 * v * s2),
                                                        4.0 * u * s2)) /
               std::sqrt(std::complex<double>(s2, -2.0 * u));
    };
    quad::ComplexQuadResult r = quad::integrate_adaptive(integrand, 0.0, 3.6, spec);
    r.value *= std::exp(kI * (4.0 * u * v));
    return r;
}

} // namespace

std::complex<double> deep_well_z(double u, double v, const quad::QuadSpec& spec)
{
    if (!(u > 0.0))
        throw std::domain_error("deep_well_z: requires u = sigma*kappa > 0");
    return deep_well_z_raw(u, v, spec).value;
}

DeepWellRkappa deep_well_r_kappa(const GaussianPacket& p, double kappa,
                                 const quad::QuadSpec& spec)
{
    if (!(kappa > 0.0))
        throw std::domain_error("deep_well_r_kappa: kappa must be > 0");
    const double sigma = p.sigma();
    const double k0 = p.k0();
    const double u = sigma * kappa;
    const double v = sigma * k0;

    const quad::ComplexQuadResult z = deep_well_z_raw(u, v, spec);
    const quad::QuadResult gamma = quad::integrate_adaptive(
        [&](double t) {
            return std::exp(-2.0 * (t * t + 2.0 * v * t)) / std::sqrt(t * t + u * u);
        },
        0.0, 6.0, spec);

    DeepWellRkappa out;
    out.im_z = z.value.imag();
    out.gamma = gamma.value;

    // Rk = pref (e^A Gamma - e^B Im z), A = -2v^2, B = 2(u^2 - v^2);
    // factor out the larger exponent so the inner combination stays finite.
    const double pref = 2.0 * k0 * sigma * std::sqrt(2.0 / kPi);
    const double A = -2.0 * v * v;
    const double B = 2.0 * (u * u - v * v);
    const double la = A + std::log(std::max(std::abs(out.gamma), 1e-300));
    const double lb = B + std::log(std::max(std::abs(out.im_z), 1e-300));
    const double M = std::max(la, lb);
    const double inner = std::copysign(std::exp(la - M), out.gamma) -
                         std::copysign(std::exp(lb - M), out.im_z);

    out.sign = inner > 0 ? 1.0 : (inner < 0 ? -1.0 : 0.0);
    out.log_abs = std::log(pref) + M + std::log(std::max(std::abs(inner), 1e-300));
    // err = pref (e^A gamma_err + e^B z_err), assembled in the same factored form.
    const double err_inner = std::exp(A - M) * gamma.error_estimate +
                             std::exp(B - M) * z.error_estimate;
    const double err_log = std::log(pref) + M + std::log(std::max(err_inner, 1e-300));
    out.error_estimate = err_log < 700.0 ? std::exp(err_log)
                                         : std::numeric_limits<double>::infinity();

    if (out.log_abs < 709.0) {
        out.value = out.sign * std::exp(out.log_abs);
    } else {
        out.value = out.sign * std::numeric_limits<double>::infinity();
        out.overflow = true;
    }

    // Branch self-check against the direct [0, kappa] quadrature whenever the
    // integrand peak e^B is comfortably representable.  A wrong branch of
    // sqrt(k^2-2i kappa k) shows up here as an O(1) relative mismatch.
    if (B <= 60.0) {
        const quad::QuadResult direct = quad::integrate_sqrt_singular(
            [&](double k) { return p.imag_axis_weight(k); }, kappa, spec);
        const double rk_direct = k0 * direct.value;
        const double noise_floor =
            pref * std::exp(B) * 1e-11 + 10.0 * (out.error_estimate + k0 * direct.error_estimate);
        if (std::abs(rk_direct - out.value) >
            1e-4 * std::max(std::abs(rk_direct), std::abs(out.value)) + noise_floor)
            throw std::runtime_error(
                "deep_well_r_kappa: branch validation against the direct form failed "
                "(|direct-lifted| = " +
                std::to_string(std::abs(rk_direct - out.value)) + ")");
    }
    return out;
}

ContinuationReport barrier_well_continuation_check(const GaussianPacket& p, double kappa0,
                                                   const quad::QuadSpec& spec,
                                                   bool flip_branch_debug)
{
    if (!(kappa0 > 0.0))
        throw std::domain_error("barrier_well_continuation_check: kappa0 must be > 0");
    const double k0 = p.k0();

    auto dplus = [&](std::complex<double> z) { return p.momentum_density_continued(z); };
    auto dminus = [&](std::complex<double> z) { return p.momentum_density_continued(-z); };

    // Principal sqrt(z^2 + kappa0^2); analytic off the imaginary rays |Im z| >= kappa0.
    auto kernel = [&](std::complex<double> z) {
        return std::sqrt(z * z + kappa0 * kappa0);
    };

    const double kmax = std::max(kappa0, p.envelope_center()) + 14.0 * p.envelope_sigma();

    // L-path: i kappa0 -> 0 along the imaginary axis (s = kappa0 sin(theta)
    // soaks up the branch-point singularity), then 0 -> infinity.
    auto l_path = [&](auto&& dens) {
        const quad::ComplexQuadResult leg = quad::integrate_adaptive(
            [&](double theta) {
                const double s = kappa0 * std::sin(theta);
                return dens(std::complex<double>(0.0, s));
            },
            0.0, 0.5 * kPi, spec);
        const quad::QuadResult real_leg = quad::integrate_adaptive(
            [&](double k) { return dens(std::complex<double>(k, 0.0)).real() /
                                   std::sqrt(k * k + kappa0 * kappa0); },
            0.0, kmax, spec);
        const std::complex<double> branch = flip_branch_debug ? kI : -kI;
        return branch * leg.value + real_leg.value;
    };

    // Straight polyline i kappa0 -> W -> infinity; t = u^2 regularizes the
    // 1/sqrt branch-point endpoint.
    auto poly_path = [&](auto&& dens, double W) {
        const std::complex<double> z0(0.0, kappa0);
        const std::complex<double> dz = std::complex<double>(W, 0.0) - z0;
        const quad::ComplexQuadResult seg = quad::integrate_adaptive(
            [&](double uu) {
                const std::complex<double> zz = z0 + (uu * uu) * dz;
                return 2.0 * uu * dz * dens(zz) / kernel(zz);
            },
            0.0, 1.0, spec);
        const quad::QuadResult tail = quad::integrate_adaptive(
            [&](double k) { return dens(std::complex<double>(k, 0.0)).real() /
                                   std::sqrt(k * k + kappa0 * kappa0); },
            W, kmax, spec);
        return seg.value + tail.value;
    };

    ContinuationReport rep;
    rep.tolerance = 1e-7;

    const std::complex<double> a_plus = l_path(dplus);
    const std::complex<double> a_minus = l_path(dminus);
    for (double w_factor : {0.5, 1.5, 3.0}) {
        const double W = w_factor * kappa0;
        if (W >= kmax)
            continue;
        rep.max_path_deviation =
            std::max(rep.max_path_deviation, std::abs(a_plus - poly_path(dplus, W)));
        rep.max_path_deviation =
            std::max(rep.max_path_deviation, std::abs(a_minus - poly_path(dminus, W)));
    }

    const std::complex<double> assembled = k0 * (a_plus - a_minus);
    rep.assembled_r = assembled.real();
    rep.direct_r = well_refraction(p, k0, kappa0, spec).total;
    rep.assembly_deviation = std::abs(assembled - rep.direct_r);

    // Cancellation identity: the continued in-well term over [0, kappa0]
    // annihilates the [0, kappa0] slice of the continued +-momentum terms.
    const quad::ComplexQuadResult wcont = quad::integrate_adaptive(
        [&](double theta) {
            const double s = kappa0 * std::sin(theta);
            return p.imag_axis_weight_continued(std::complex<double>(0.0, s));
        },
        0.0, 0.5 * kPi, spec);
    const std::complex<double> third_continued = k0 * wcont.value;

    const quad::QuadResult slice = quad::integrate_adaptive(
        [&](double theta) {
            const double s = kappa0 * std::sin(theta);
            return p.momentum_density(s) - p.momentum_density(-s);
        },
        0.0, 0.5 * kPi, spec);
    // 1/sqrt(k^2-kappa0^2) = -i / sqrt(kappa0^2-k^2) on [0, kappa0).
    const std::complex<double> branch = flip_branch_debug ? kI : -kI;
    const std::complex<double> first_two_slice = branch * k0 * slice.value;

    rep.cancellation_residual = std::abs(third_continued + first_two_slice);
    rep.residual_scale = std::max(std::abs(third_continued), std::abs(first_two_slice));

    rep.pass = rep.max_path_deviation <= rep.tolerance &&
               rep.assembly_deviation <= rep.tolerance * std::max(1.0, std::abs(rep.direct_r)) &&
               rep.cancellation_residual <= rep.tolerance * std::max(1.0, rep.residual_scale);
    return rep;
}

} // namespace welltime::refraction

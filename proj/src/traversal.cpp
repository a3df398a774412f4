#include "welltime/traversal.hpp"

#include <cmath>
#include <stdexcept>

namespace welltime::traversal {

TraversalReport traversal_times(const PacketSpectrum& s, double k0, double kappa, double L,
                                const PhysicalConstants& c, const quad::QuadSpec& spec)
{
    if (!(L > 0.0) || !(k0 > 0.0))
        throw std::domain_error("traversal_times: requires L > 0 and k0 > 0");

    TraversalReport rep;
    rep.refraction = refraction::well_refraction(s, k0, kappa, spec);
    const quad::QuadResult q = refraction::free_q(s, k0, spec);

    const double time_scale = c.mass * L / (c.hbar * k0); // L / v0
    rep.tau_well = time_scale * rep.refraction.total;
    rep.tau_free = time_scale * q.value;
    rep.delta_tau = rep.tau_free - rep.tau_well;
    rep.classical_tau = c.mass * L / (c.hbar * std::sqrt(k0 * k0 + kappa * kappa));

    rep.tolerance = time_scale * (rep.refraction.error_estimate + q.error_estimate);
    if (rep.delta_tau > rep.tolerance)
        rep.classification = Classification::Advanced;
    else if (rep.delta_tau < -rep.tolerance)
        rep.classification = Classification::Delayed;
    else
        rep.classification = Classification::Neutral;
    return rep;
}

VelocityFunctionals velocity_functionals(double k, double kappa, double L,
                                         const PhysicalConstants& c)
{
    if (!(k > 0.0) || !(k < kappa))
        throw std::domain_error("velocity_functionals: tau_in requires 0 < k < kappa");
    VelocityFunctionals v;
    v.v_top = c.hbar * std::sqrt(k * k + kappa * kappa) / c.mass;
    v.v_in = c.hbar * std::sqrt(kappa * kappa - k * k) / c.mass;
    v.tau_top = L / v.v_top;
    v.tau_in = L / v.v_in;
    return v;
}

double tau_top(double k, double kappa, double L, const PhysicalConstants& c)
{
    return c.mass * L / (c.hbar * std::sqrt(k * k + kappa * kappa));
}

double weighted_sum_traversal(const PacketSpectrum& s, double kappa, double L,
                              const PhysicalConstants& c, const quad::QuadSpec& spec)
{
    if (!(L > 0.0))
        throw std::domain_error("weighted_sum_traversal: L must be > 0");
    const double scale = c.mass * L / c.hbar;
    const double center = s.envelope_center();
    const double width = s.envelope_sigma();

    if (kappa == 0.0) {
        // Free weighted sum; the +- pieces only converge combined.
        const quad::QuadResult combined = quad::integrate_gaussian_tail(
            [&](double k) { return (s.momentum_density(k) - s.momentum_density(-k)) / k; },
            center, width, spec);
        return scale * combined.value;
    }

    const quad::QuadResult pos = quad::integrate_gaussian_tail(
        [&](double k) {
            return s.momentum_density(k) / std::sqrt(k * k + kappa * kappa);
        },
        center, width, spec);
    const quad::QuadResult neg = quad::integrate_gaussian_tail(
        [&](double k) {
            return s.momentum_density(-k) / std::sqrt(k * k + kappa * kappa);
        },
        -center, width, spec);
    // tau_in's pole and the weight combine into exactly the 1/sqrt(kappa^2-k^2)
    // kernel handled by the sin-theta substitution.
    const quad::QuadResult inwell = quad::integrate_sqrt_singular(
        [&](double k) { return s.imag_axis_weight(k); }, kappa, spec);

    return scale * (pos.value - neg.value + inwell.value);
}

} // namespace welltime::traversal

#pragma once

#include "welltime/refraction.hpp"

namespace welltime::traversal {

enum class Classification { Advanced, Delayed, Neutral };

struct TraversalReport {
    double tau_well = 0.0;
    double tau_free = 0.0;
    double delta_tau = 0.0; // tau_free - tau_well; > 0 means the packet is advanced
    refraction::RefractionResult refraction;
    double classical_tau = 0.0;
    Classification classification = Classification::Neutral;
    double tolerance = 0.0; // dead band used for the classification
};

// tau_W = (mu L / hbar k0) R, tau_F = (mu L / hbar k0) Q, delta = tau_F - tau_W.
// The Neutral band is the propagated quadrature error, not a fixed epsilon.
TraversalReport traversal_times(const PacketSpectrum& s, double k0, double kappa, double L,
                                const PhysicalConstants& c, const quad::QuadSpec& spec);

struct VelocityFunctionals {
    double v_top = 0.0;  // hbar sqrt(k^2+kappa^2)/mu
    double v_in = 0.0;   // hbar sqrt(kappa^2-k^2)/mu
    double tau_top = 0.0;
    double tau_in = 0.0;
};

/// Requires 0 < k < kappa (v_in vanishes at k = kappa).
VelocityFunctionals velocity_functionals(double k, double kappa, double L,
                                         const PhysicalConstants& c);

/// L / v_top(k); defined for every k.
double tau_top(double k, double kappa, double L, const PhysicalConstants& c);

// Independent assembly of tau_W as the weighted sum
//   int tau_top D(k) - int tau_top D(-k) + int_0^kappa tau_in W(k) dk;
// algebraically identical to (L/v0) R and kept as a separate code path for
// cross-checking.
double weighted_sum_traversal(const PacketSpectrum& s, double kappa, double L,
                              const PhysicalConstants& c, const quad::QuadSpec& spec);

} // namespace welltime::traversal

#pragma once

#include <stdexcept>

namespace welltime {

/// Unit system; defaults are Hartree atomic units (hbar = mass = 1).
struct PhysicalConstants {
    double mass = 1.0;
    double hbar = 1.0;

    PhysicalConstants() = default;
    PhysicalConstants(double mass_, double hbar_) : mass(mass_), hbar(hbar_)
    {
        if (!(mass > 0.0) || !(hbar > 0.0))
            throw std::invalid_argument("PhysicalConstants: mass and hbar must be > 0");
    }
};

// Rectangular well V(q) = -V0 on -a < q < -b with a > b > 0; arrival point
// at the origin.  Width L = a - b is derived, never stored.
struct WellGeometry {
    double depth;     // V0
    double edge_far;  // a
    double edge_near; // b

    WellGeometry(double depth_, double edge_far_, double edge_near_)
        : depth(depth_), edge_far(edge_far_), edge_near(edge_near_)
    {
        if (depth < 0.0)
            throw std::invalid_argument("WellGeometry: depth must be >= 0");
        if (!(edge_near > 0.0) || !(edge_far > edge_near))
            throw std::invalid_argument("WellGeometry: requires edge_far > edge_near > 0");
    }

    double width() const { return edge_far - edge_near; }
};

/// Initial phase-space point of the incident particle.
struct KinematicState {
    double q0; // initial position
    double p0; // initial momentum

    double k0(const PhysicalConstants& c) const { return p0 / c.hbar; }
    double energy(const PhysicalConstants& c) const { return p0 * p0 / (2.0 * c.mass); }
    double group_velocity(const PhysicalConstants& c) const { return p0 / c.mass; }
};

/// kappa = sqrt(2 mu V0) / hbar, the well's wavenumber scale.
double kappa(const WellGeometry& well, const PhysicalConstants& c);

/// Inverse well depth for a given kappa: V0 = (hbar kappa)^2 / (2 mu).
double depth_from_kappa(double kappa_value, const PhysicalConstants& c);

// k0 / sqrt(k0^2 + kappa^2) = sqrt(E0/(E0+V0)): the classical refraction
// index of the well.  Requires k0 > 0.
double classical_refraction(double k0, double kappa_value);

} // namespace welltime

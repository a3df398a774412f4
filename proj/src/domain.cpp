#include "welltime/domain.hpp"

#include <cmath>

namespace welltime {

double kappa(const WellGeometry& well, const PhysicalConstants& c)
{
    return std::sqrt(2.0 * c.mass * well.depth) / c.hbar;
}

double depth_from_kappa(double kappa_value, const PhysicalConstants& c)
{
    if (kappa_value < 0.0)
        throw std::invalid_argument("depth_from_kappa: kappa must be >= 0");
    return c.hbar * c.hbar * kappa_value * kappa_value / (2.0 * c.mass);
}

double classical_refraction(double k0, double kappa_value)
{
    if (!(k0 > 0.0))
        throw std::domain_error("classical_refraction: k0 must be > 0");
    return k0 / std::sqrt(k0 * k0 + kappa_value * kappa_value);
}

} // namespace welltime

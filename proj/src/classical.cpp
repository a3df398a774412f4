#include "welltime/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "welltime/specfun.hpp"

namespace welltime::classical {

KernelRegion region_of(double eta, const WellGeometry& well)
{
    if (eta > -well.edge_near)
        return KernelRegion::Region1;
    if (eta > -well.edge_far)
        return KernelRegion::Region2;
    return KernelRegion::Region3;
}

double kernel_value(KernelRegion region, double eta, double zeta, double kappa_value,
                    const WellGeometry& well)
{
    if (region_of(eta, well) != region)
        throw std::domain_error("kernel_value: eta outside the declared region");
    const double az = std::abs(zeta);
    switch (region) {
    case KernelRegion::Region1:
        return 0.5 * eta;
    case KernelRegion::Region2:
        return 0.5 * eta -
               0.5 * well.edge_near * (specfun::bessel_j0(kappa_value * az) - 1.0);
    case KernelRegion::Region3: {
        // bessel_i0 switches to the scaled-asymptotic path internally for
        // large arguments and signals overflow once e^x is unrepresentable.
        const double x = kappa_value * az;
        return 0.5 * eta - 0.5 * well.width() * (specfun::bessel_i0(x) - 1.0);
    }
    }
    throw std::logic_error("kernel_value: unreachable");
}

double classical_toa(KernelRegion region, double q0, double p0, const WellGeometry& well,
                     const PhysicalConstants& c)
{
    if (!(p0 > 0.0))
        throw std::domain_error("classical_toa: p0 must be > 0");
    const double mu = c.mass;
    const double two_mu_v0 = 2.0 * mu * well.depth;
    switch (region) {
    case KernelRegion::Region1:
        return -mu * q0 / p0;
    case KernelRegion::Region2: {
        if (!(p0 * p0 > two_mu_v0))
            throw std::domain_error("classical_toa: t2 requires 2 mu V0 / p0^2 < 1");
        return -mu * (q0 + well.edge_near) / p0 +
               mu * well.edge_near / std::sqrt(p0 * p0 - two_mu_v0);
    }
    case KernelRegion::Region3:
        return -mu * (q0 + well.width()) / p0 +
               mu * well.width() / std::sqrt(p0 * p0 + two_mu_v0);
    }
    throw std::logic_error("classical_toa: unreachable");
}

double classical_well_time(double p0, const WellGeometry& well, const PhysicalConstants& c)
{
    if (!(p0 > 0.0))
        throw std::domain_error("classical_well_time: p0 must be > 0");
    return c.mass * well.width() / std::sqrt(p0 * p0 + 2.0 * c.mass * well.depth);
}

SeriesToa classical_limit_series(KernelRegion region, double q0, double p0,
                                 const WellGeometry& well, const PhysicalConstants& c,
                                 int n_terms)
{
    if (!(p0 > 0.0))
        throw std::domain_error("classical_limit_series: p0 must be > 0");
    if (n_terms < 1)
        throw std::invalid_argument("classical_limit_series: n_terms must be >= 1");

    const double mu = c.mass;
    const double w = 2.0 * mu * well.depth / (p0 * p0);

    SeriesToa out;
    // m=1 term of the identity applied to the eta/2 piece: -mu q0 / p0.
    out.value = -mu * q0 / p0;
    out.terms_used = 1;
    if (region == KernelRegion::Region1)
        return out;

    if (!(w < 1.0))
        throw std::domain_error(
            "classical_limit_series: outside the series radius (2 mu V0 / p0^2 >= 1)");
    if (n_terms < 4)
        throw std::invalid_argument("classical_limit_series: n_terms must be >= 4 for "
                                    "Region2/Region3");

    // Bessel Taylor term n, pushed through the identity, contributes
    //   (mu X / p0) * s^n * C(2n,n) (w/4)^n,
    // with X = b, s = +1 for Region2 (J0 kernel) and X = L, s = -1 for
    // Region3 (I0 kernel).  c_n = C(2n,n)/4^n obeys c_n = c_{n-1}(2n-1)/(2n).
    const double sign = region == KernelRegion::Region2 ? 1.0 : -1.0;
    const double length = region == KernelRegion::Region2 ? well.edge_near : well.width();
    const double scale = mu * length / p0;

    double cn = 1.0;
    double prev_mag = 0.0;
    for (int n = 1; n < n_terms; ++n) {
        cn *= (2.0 * n - 1.0) / (2.0 * n);
        const double term = scale * std::pow(sign * w, n) * cn;
        out.value += term;
        ++out.terms_used;
        if (n > 1 && std::abs(term) > prev_mag)
            out.tail_warning = true;
        prev_mag = std::abs(term);
    }
    return out;
}

} // namespace welltime::classical

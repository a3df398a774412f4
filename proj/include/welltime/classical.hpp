#pragma once

#include "welltime/domain.hpp"

namespace welltime::classical {

// Kernel regions by midpoint coordinate eta, fixed by the well edges:
//   Region1: eta > -b   (free segment next to the arrival point, incl. eta >= 0)
//   Region2: -a < eta <= -b  (midpoint inside the well)
//   Region3: eta <= -a  (left of the well)
// Half-open boundaries are a documented convention; they carry no measure in
// any integral.
enum class KernelRegion { Region1, Region2, Region3 };

KernelRegion region_of(double eta, const WellGeometry& well);

// Time kernel factor T~(eta, zeta) of the quantized arrival-time operator:
//   T~1 = eta/2
//   T~2 = eta/2 - (b/2) [J0(kappa |zeta|) - 1]
//   T~3 = eta/2 - (L/2) [I0(kappa |zeta|) - 1]
// Throws std::domain_error when eta is outside the stated region.
double kernel_value(KernelRegion region, double eta, double zeta, double kappa_value,
                    const WellGeometry& well);

// Classical time of arrival at the origin for a particle launched at (q0, p0):
//   t1 = -mu q0/p0
//   t2 = -mu (q0+b)/p0 + mu b / sqrt(p0^2 - 2 mu V0)   (needs 2 mu V0 < p0^2)
//   t3 = -mu (q0+L)/p0 + mu L / sqrt(p0^2 + 2 mu V0)
// t2 is implemented exactly as printed in its source; the radical condition
// is inherited and enforced.
double classical_toa(KernelRegion region, double q0, double p0, const WellGeometry& well,
                     const PhysicalConstants& c);

/// mu L / sqrt(p0^2 + 2 mu V0), the classical traversal time across the well.
double classical_well_time(double p0, const WellGeometry& well, const PhysicalConstants& c);

struct SeriesToa {
    double value = 0.0;
    int terms_used = 0;
    bool tail_warning = false; // non-monotone tail detected before n_terms
};

// Term-by-term inverse Weyl-Wigner route: expand the region kernel's Bessel
// factor, transform each power with
//   int nu^{m-1} sgn(nu) e^{-ix nu} dnu = 2 (m-1)! / (i^m x^m),
// and sum.  Converges to classical_toa for 2 mu V0 / p0^2 < 1.
SeriesToa classical_limit_series(KernelRegion region, double q0, double p0,
                                 const WellGeometry& well, const PhysicalConstants& c,
                                 int n_terms);

} // namespace welltime::classical

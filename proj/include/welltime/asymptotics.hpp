#pragma once

#include <vector>

#include "welltime/packet.hpp"
#include "welltime/quadrature.hpp"

namespace welltime::asymptotics {

enum class Regime { HighEnergy, WidePacket, NarrowShallow, DeepWell };

struct ExpansionResult {
    double value = 0.0;
    int terms_used = 0;
    double truncation_estimate = 0.0; // magnitude of the first omitted term
    Regime regime = Regime::HighEnergy;
    bool regime_warning = false; // advisory only; never a hard error
};

// High-energy double sum
//   R ~ sum_{j,l} (-1)^{j+l} 2^{-2l} (hbar^2/2 mu E0)^j C(2j+2l,2l) C(2l,l)
//       (V0/E0)^l Phi^{(2j)}(0).
// The j = 0 slice resums the binomial series toward sqrt(E0/(E0+V0));
// requires V0/E0 < 1 (series radius).
ExpansionResult high_energy_r(const PacketSpectrum& s, double E0, double V0, int j_max,
                              int l_max, const PhysicalConstants& c = {});

// chi_n = d^{2n}/dk^{2n} (k^2+kappa^2)^{-1/2} at k0, n = 0..n_max, via the
// exact recurrence f^{(m+1)} = -[(2m+1) k f^{(m)} + m^2 f^{(m-1)}]/(k^2+kappa^2).
std::vector<double> chi_derivatives(double k0, double kappa, int n_max);

// Wide-packet expansion
//   R ~ k0 [ chi_0 + sum_{n>=1} (2 sigma)^{-2n} ((2n-1)!!/(2n)!) chi_n ];
// the n = 0 term is the classical refraction index.  Asymptotic, not
// convergent: summation stops at the optimal-truncation index if that comes
// before n_max, and terms_used reports where it stopped.
ExpansionResult wide_packet_r(const GaussianPacket& p, double kappa, int n_max);

// Shallow-well narrow-packet form R ~ Q + Omega,
//   Omega = sqrt(2 pi) k0 sigma e^{-2 k0^2 sigma^2}
//           [ k0 L0(alpha) - k0 H0(alpha) + kappa L1(alpha) ],  alpha = 4 k0 kappa sigma^2.
ExpansionResult narrow_shallow_r(const GaussianPacket& p, double kappa);

/// Deep-well dominant term Rk ~ -2 sqrt(2/pi) k0 sigma e^{2 sigma^2(kappa^2-k0^2)} Im(z);
/// truncation_estimate is the dropped gamma-term bound.
ExpansionResult deep_well_dominant_r(const GaussianPacket& p, double kappa,
                                     const quad::QuadSpec& spec);

} // namespace welltime::asymptotics

#pragma once

#include <complex>
#include <stdexcept>

#include "welltime/domain.hpp"

namespace welltime {

// Incident wave packet seen purely through its momentum-space functionals.
// Everything downstream (refraction, traversal) consumes only these; the
// position-space wavefunction never leaves this module.
//
// Conventions: momentum_density(k) = |Psi(k)|^2 over the full real line;
// autocorrelation(zeta) is the envelope Phi(zeta) with Phi(0) = 1 -- the
// carrier phase e^{i k0 zeta} is applied by callers.  The continued
// quantities are the entire extensions used by the complex-plane machinery;
// imag_axis_weight(k) is Im[2 Psi(ik) conj(Psi(-ik))].
class PacketSpectrum {
public:
    virtual ~PacketSpectrum() = default;

    virtual double momentum_density(double k) const = 0;
    virtual double imag_axis_weight(double k) const = 0;
    virtual std::complex<double> autocorrelation(double zeta) const = 0;

    /// e^{log_shift} * Phi(zeta), combined in the exponent (deep-well safe).
    virtual std::complex<double> autocorrelation_scaled(double zeta, double log_shift) const = 0;

    virtual std::complex<double> momentum_density_continued(std::complex<double> z) const = 0;

    /// Entire continuation of the imaginary-axis weight:
    /// W(z) = -i [ D(iz) - D(-iz) ] with D = momentum_density_continued.
    std::complex<double> imag_axis_weight_continued(std::complex<double> z) const;

    /// Phi^{(2j)}(0), the even autocorrelation derivatives at zero.
    virtual double phi_even_derivative(int j) const = 0;

    /// Momentum spectrum is entire in k (no poles).  Required by every
    /// complex-plane route in this library; the residue algebra for pole-
    /// carrying spectra is out of scope.
    virtual bool is_entire() const = 0;

    // Gaussian envelope bound |Psi(k)|^2 <= A exp(-(k-c)^2/(2 s^2)) used by
    // the semi-infinite truncation policy.
    virtual double envelope_center() const = 0;
    virtual double envelope_sigma() const = 0;
};

/// Gaussian packet: position width sigma, mean position q0, mean wavenumber k0.
class GaussianPacket final : public PacketSpectrum {
public:
    GaussianPacket(double q0, double sigma, double k0);

    double q0() const { return q0_; }
    double sigma() const { return sigma_; }
    double k0() const { return k0_; }

    double momentum_density(double k) const override;
    double imag_axis_weight(double k) const override;
    std::complex<double> autocorrelation(double zeta) const override;
    std::complex<double> autocorrelation_scaled(double zeta, double log_shift) const override;
    std::complex<double> momentum_density_continued(std::complex<double> z) const override;
    double phi_even_derivative(int j) const override;
    bool is_entire() const override { return true; }
    double envelope_center() const override { return k0_; }
    double envelope_sigma() const override { return 0.5 / sigma_; }

    /// Full momentum wavefunction Psi(z) including the q0 phase (entire in z).
    std::complex<double> momentum_wavefunction(std::complex<double> z) const;

    /// Probability mass of |phi(q)|^2 to the right of position x.
    double position_mass_right_of(double x) const;

private:
    double q0_;
    double sigma_;
    double k0_;
};

// Rejects traversal setups whose packet leaks past the far well edge -a:
// the tau_W derivation assumes support strictly to the left of the well.
void validate_packet_support(const GaussianPacket& packet, const WellGeometry& well,
                             double cutoff = 1e-8);

} // namespace welltime

#include "welltime/packet.hpp"

#include <cmath>
#include <string>

namespace welltime {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
} // namespace

std::complex<double> PacketSpectrum::imag_axis_weight_continued(std::complex<double> z) const
{
    const std::complex<double> i(0.0, 1.0);
    return -i * (momentum_density_continued(i * z) - momentum_density_continued(-i * z));
}

GaussianPacket::GaussianPacket(double q0, double sigma, double k0)
    : q0_(q0), sigma_(sigma), k0_(k0)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("GaussianPacket: sigma must be > 0");
}

double GaussianPacket::momentum_density(double k) const
{
    const double d = k - k0_;
    return kSqrt2OverPi * sigma_ * std::exp(-2.0 * sigma_ * sigma_ * d * d);
}

double GaussianPacket::imag_axis_weight(double k) const
{
    // Im[2 Psi(ik) conj(Psi(-ik))] = 2 sqrt(2/pi) sigma e^{2 s^2 (k^2-k0^2)} sin(4 s^2 k0 k);
    // q0 cancels between the two phase factors.
    const double s2 = sigma_ * sigma_;
    return 2.0 * kSqrt2OverPi * sigma_ * std::exp(2.0 * s2 * (k * k - k0_ * k0_)) *
           std::sin(4.0 * s2 * k0_ * k);
}

std::complex<double> GaussianPacket::autocorrelation(double zeta) const
{
    return {std::exp(-zeta * zeta / (8.0 * sigma_ * sigma_)), 0.0};
}

std::complex<double> GaussianPacket::autocorrelation_scaled(double zeta, double log_shift) const
{
    return {std::exp(log_shift - zeta * zeta / (8.0 * sigma_ * sigma_)), 0.0};
}

std::complex<double> GaussianPacket::momentum_density_continued(std::complex<double> z) const
{
    const std::complex<double> d = z - k0_;
    return kSqrt2OverPi * sigma_ * std::exp(-2.0 * sigma_ * sigma_ * d * d);
}

double GaussianPacket::phi_even_derivative(int j) const
{
    if (j < 0)
        throw std::invalid_argument("phi_even_derivative: j must be >= 0");
    // Phi(z) = e^{-z^2/8s^2}  =>  Phi^{(2j)}(0) = (-1)^j (2j-1)!! / (4 s^2)^j.
    double v = 1.0;
    for (int m = 1; m <= j; ++m)
        v *= -(2.0 * m - 1.0) / (4.0 * sigma_ * sigma_);
    return v;
}

std::complex<double> GaussianPacket::momentum_wavefunction(std::complex<double> z) const
{
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> d = z - k0_;
    const double norm = std::sqrt(sigma_ * kSqrt2OverPi);
    return norm * std::exp(-i * q0_ * d - sigma_ * sigma_ * d * d);
}

double GaussianPacket::position_mass_right_of(double x) const
{
    return 0.5 * std::erfc((x - q0_) / (std::sqrt(2.0) * sigma_));
}

void validate_packet_support(const GaussianPacket& packet, const WellGeometry& well,
                             double cutoff)
{
    const double leak = packet.position_mass_right_of(-well.edge_far);
    if (packet.q0() >= -well.edge_far)
        throw std::invalid_argument("packet support: q0 must lie left of the well edge -a");
    if (leak > cutoff)
        throw std::invalid_argument(
            "packet support: probability mass " + std::to_string(leak) +
            " beyond -a exceeds cutoff " + std::to_string(cutoff));
}

} // namespace welltime

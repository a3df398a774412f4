#include "welltime/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "welltime/refraction.hpp"
#include "welltime/specfun.hpp"

namespace welltime::asymptotics {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

ExpansionResult high_energy_r(const PacketSpectrum& s, double E0, double V0, int j_max,
                              int l_max, const PhysicalConstants& c)
{
    if (!(E0 > 0.0))
        throw std::domain_error("high_energy_r: E0 must be > 0");
    if (V0 < 0.0 || j_max < 0 || l_max < 0)
        throw std::invalid_argument("high_energy_r: bad arguments");
    const double ratio = V0 / E0;
    if (ratio >= 1.0)
        throw std::domain_error("high_energy_r: V0/E0 >= 1 lies outside the binomial "
                                "series radius (divergent regime)");

    const double hbar2_over_2muE = c.hbar * c.hbar / (2.0 * c.mass * E0);

    ExpansionResult out;
    out.regime = Regime::HighEnergy;
    out.regime_warning = ratio > 0.5;

    for (int j = 0; j <= j_max; ++j) {
        const double phi2j = s.phi_even_derivative(j);
        // binom(2j+2l, 2l) * binom(2l, l) built up recursively in l.
        double c_jl = 1.0;
        for (int l = 0; l <= l_max; ++l) {
            if (l > 0) {
                // binom(2j+2l,2l)binom(2l,l) / [binom(2j+2l-2,2l-2)binom(2l-2,l-1)]
                //   = (2j+2l)(2j+2l-1) / l^2
                c_jl *= (2.0 * j + 2.0 * l) * (2.0 * j + 2.0 * l - 1.0) /
                        (static_cast<double>(l) * l);
            }
            const double sign = ((j + l) % 2 == 0) ? 1.0 : -1.0;
            out.value += sign * std::pow(0.25, l) * std::pow(hbar2_over_2muE, j) * c_jl *
                         std::pow(ratio, l) * phi2j;
            ++out.terms_used;
        }
    }
    // First omitted terms along each truncated direction.
    const int L = l_max + 1;
    const int J = j_max + 1;
    const double next_l = std::exp(std::lgamma(2.0 * L + 1.0) - 2.0 * std::lgamma(L + 1.0)) *
                          std::pow(0.25 * ratio, L) * std::abs(s.phi_even_derivative(0));
    const double next_j = std::pow(hbar2_over_2muE, J) * std::abs(s.phi_even_derivative(J));
    out.truncation_estimate = std::max(next_l, next_j);
    return out;
}

std::vector<double> chi_derivatives(double k0, double kappa, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("chi_derivatives: n_max must be >= 0");
    const double denom = k0 * k0 + kappa * kappa;
    if (!(denom > 0.0))
        throw std::domain_error("chi_derivatives: k0 and kappa cannot both vanish");

    // f = (k^2+kappa^2)^{-1/2} satisfies (k^2+kappa^2) f' = -k f; Leibniz gives
    // f^{(m+1)} = -[(2m+1) k f^{(m)} + m^2 f^{(m-1)}]/(k^2+kappa^2).
    std::vector<double> all(2 * n_max + 1);
    all[0] = 1.0 / std::sqrt(denom);
    if (n_max > 0)
        all[1] = -k0 * all[0] / denom;
    for (int m = 1; m < 2 * n_max; ++m)
        all[m + 1] =
            -((2.0 * m + 1.0) * k0 * all[m] + static_cast<double>(m) * m * all[m - 1]) / denom;

    std::vector<double> chi(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        chi[n] = all[2 * n];
    return chi;
}

ExpansionResult wide_packet_r(const GaussianPacket& p, double kappa, int n_max)
{
    if (n_max < 0 || n_max > 6)
        throw std::invalid_argument("wide_packet_r: n_max must lie in [0, 6] "
                                    "(exact chi recurrence range)");
    const double k0 = p.k0();
    if (!(k0 > 0.0))
        throw std::domain_error("wide_packet_r: k0 must be > 0");
    const double sigma = p.sigma();

    ExpansionResult out;
    out.regime = Regime::WidePacket;
    out.regime_warning = sigma * k0 < 3.0;

    const std::vector<double> chi = chi_derivatives(k0, kappa, n_max + 1);
    const double s2inv = 1.0 / (4.0 * sigma * sigma); // (2 sigma)^{-2}

    auto nth_term = [&](int n) {
        // (2n-1)!!/(2n)! = 1/(2^n n!)
        double coef = 1.0;
        for (int m = 1; m <= n; ++m)
            coef *= s2inv / (2.0 * m);
        return k0 * chi[static_cast<size_t>(n)] * coef;
    };

    out.value = nth_term(0);
    out.terms_used = 1;
    double prev_mag = std::abs(out.value);
    for (int n = 1; n <= n_max; ++n) {
        const double term = nth_term(n);
        if (n > 1 && std::abs(term) > prev_mag) {
            // Optimal truncation reached; the omitted (growing) term is the estimate.
            out.truncation_estimate = std::abs(term);
            return out;
        }
        out.value += term;
        ++out.terms_used;
        prev_mag = std::abs(term);
    }
    out.truncation_estimate = std::abs(nth_term(n_max + 1));
    return out;
}

ExpansionResult narrow_shallow_r(const GaussianPacket& p, double kappa)
{
    if (kappa < 0.0)
        throw std::domain_error("narrow_shallow_r: kappa must be >= 0");
    const double k0 = p.k0();
    const double sigma = p.sigma();
    const double alpha = 4.0 * k0 * kappa * sigma * sigma;

    ExpansionResult out;
    out.regime = Regime::NarrowShallow;
    out.regime_warning = sigma * kappa > 0.3;

    const double q = refraction::free_q_closed(p);
    double omega = 0.0;
    if (alpha > 0.0) {
        const double bracket = k0 * (specfun::struve_l0(alpha) - specfun::struve_h0(alpha)) +
                               kappa * specfun::struve_l1(alpha);
        const double envelope =
            std::sqrt(2.0 * kPi) * k0 * sigma * std::exp(-2.0 * k0 * k0 * sigma * sigma);
        omega = envelope * bracket;
        // Next Struve orders ~ alpha^2/2.25 of the bracket: the documented
        // truncation heuristic for the dropped hypergeometric tail.
        out.truncation_estimate = std::abs(omega) * alpha * alpha / 2.25;
    }
    out.value = q + omega;
    out.terms_used = 2;
    return out;
}

ExpansionResult deep_well_dominant_r(const GaussianPacket& p, double kappa,
                                     const quad::QuadSpec& spec)
{
    if (!(kappa > 0.0))
        throw std::domain_error("deep_well_dominant_r: kappa must be > 0");
    const double k0 = p.k0();
    const double sigma = p.sigma();
    const double u = sigma * kappa;
    const double v = sigma * k0;

    ExpansionResult out;
    out.regime = Regime::DeepWell;
    out.regime_warning = kappa < 2.0 * k0;

    const double pref = 2.0 * k0 * sigma * std::sqrt(2.0 / kPi);
    const double imz = refraction::deep_well_z(u, v, spec).imag();
    out.value = -pref * std::exp(2.0 * (u * u - v * v)) * imz;
    out.terms_used = 1;

    // Dropped term: pref e^{-2 sigma^2 k0^2} gamma.
    const quad::QuadResult gamma = quad::integrate_adaptive(
        [&](double t) {
            return std::exp(-2.0 * (t * t + 2.0 * v * t)) / std::sqrt(t * t + u * u);
        },
        0.0, 6.0, spec);
    out.truncation_estimate = pref * std::exp(-2.0 * v * v) * std::abs(gamma.value);
    return out;
}

} // namespace welltime::asymptotics

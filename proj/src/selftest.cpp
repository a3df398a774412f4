#include "welltime/selftest.hpp"

#include <cmath>
#include <sstream>

#include "welltime/classical.hpp"
#include "welltime/packet.hpp"
#include "welltime/refraction.hpp"
#include "welltime/traversal.hpp"

namespace welltime {

namespace {

void add_check(SelftestReport& rep, const std::string& name, bool ok, const std::string& detail)
{
    rep.checks.push_back({name, ok, detail});
}

template <typename F>
void guarded(SelftestReport& rep, const std::string& name, F&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        add_check(rep, name, false, e.what());
    }
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

} // namespace

bool SelftestReport::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

SelftestReport run_selftest(const quad::QuadSpec& spec, bool flip_branch_debug)
{
    SelftestReport rep;

    guarded(rep, "normalization", [&] {
        double worst = 0.0;
        for (double sigma : {0.3, 1.0, 4.0}) {
            const GaussianPacket p(-50.0, sigma, 2.0);
            const auto norm = quad::integrate_gaussian_tail(
                [&](double k) { return p.momentum_density(k) + p.momentum_density(-k); },
                p.k0(), p.envelope_sigma(), spec);
            worst = std::max(worst, std::abs(norm.value - 1.0));
        }
        add_check(rep, "normalization", worst <= 1e-10, "max |int density - 1| = " + fmt(worst));
    });

    guarded(rep, "autocorrelation-unit", [&] {
        double worst = 0.0;
        for (double sigma : {0.3, 1.0, 4.0})
            worst = std::max(
                worst, std::abs(GaussianPacket(-50.0, sigma, 2.0).autocorrelation(0.0).real() -
                               1.0));
        add_check(rep, "autocorrelation-unit", worst <= 1e-14, "max |Phi(0)-1| = " + fmt(worst));
    });

    guarded(rep, "oracle-equivalence", [&] {
        double worst = 0.0;
        for (double k0 : {1.0, 3.0, 8.0})
            for (double sigma : {0.5, 1.0, 2.0})
                for (double kap : {0.2, 1.0, 2.0}) {
                    if (sigma * kap > 2.0)
                        continue;
                    const GaussianPacket p(-60.0 * sigma, sigma, k0);
                    const double rm = refraction::well_refraction(p, k0, kap, spec).total;
                    const double rz = refraction::zeta_oracle_refraction(p, k0, kap, spec);
                    worst = std::max(worst, std::abs(rm - rz));
                }
        add_check(rep, "oracle-equivalence", worst <= 1e-7,
                  "max |momentum - zeta| = " + fmt(worst));
    });

    guarded(rep, "cancellation-identity", [&] {
        bool ok = true;
        std::string detail;
        for (auto [k0, sigma, kap] : {std::tuple{2.0, 1.0, 1.0}, std::tuple{5.0, 0.5, 2.0}}) {
            const GaussianPacket p(-60.0 * sigma, sigma, k0);
            const auto rpt =
                refraction::barrier_well_continuation_check(p, kap, spec, flip_branch_debug);
            if (!rpt.pass) {
                ok = false;
                detail = "residual " + fmt(rpt.cancellation_residual) + ", path dev " +
                         fmt(rpt.max_path_deviation) + ", assembly dev " +
                         fmt(rpt.assembly_deviation);
            }
        }
        add_check(rep, "cancellation-identity", ok, ok ? "pass at both points" : detail);
    });

    guarded(rep, "classical-limit-series", [&] {
        const PhysicalConstants c;
        double worst = 0.0;
        for (double w : {0.1, 0.3, 0.5}) {
            const double p0 = 5.0;
            const WellGeometry well(0.5 * w * p0 * p0, 3.0, 1.0);
            const double closed =
                classical::classical_toa(classical::KernelRegion::Region3, -10.0, p0, well, c);
            const auto series = classical::classical_limit_series(
                classical::KernelRegion::Region3, -10.0, p0, well, c, 200);
            worst = std::max(worst, std::abs(series.value - closed));
        }
        add_check(rep, "classical-limit-series", worst <= 1e-10,
                  "max |series - closed| = " + fmt(worst));
    });

    guarded(rep, "classical-limit-quadrature", [&] {
        const GaussianPacket p(-200.0, 10.0, 5.0);
        const double r = refraction::well_refraction(p, 5.0, 1.0, spec).total;
        const double cl = classical_refraction(5.0, 1.0);
        add_check(rep, "classical-limit-quadrature", std::abs(r - cl) <= 1e-4,
                  "|R - classical| = " + fmt(std::abs(r - cl)));
    });

    guarded(rep, "weighted-sum-identity", [&] {
        const PhysicalConstants c;
        double worst = 0.0;
        for (auto [k0, sigma, kap] : {std::tuple{2.0, 1.0, 1.0}, std::tuple{5.0, 0.5, 0.5}}) {
            const GaussianPacket p(-60.0 * sigma, sigma, k0);
            const double lhs = traversal::weighted_sum_traversal(p, kap, 1.0, c, spec);
            const double rhs =
                refraction::well_refraction(p, k0, kap, spec).total / k0; // L/v0 = 1/k0 (a.u.)
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        add_check(rep, "weighted-sum-identity", worst <= 1e-10,
                  "max |weighted - (L/v0) R| = " + fmt(worst));
    });

    guarded(rep, "free-q-closed-form", [&] {
        const GaussianPacket p(-60.0, 1.0, 2.0);
        const double quad_q = refraction::free_q(p, 2.0, spec).value;
        const double closed = refraction::free_q_closed(p);
        add_check(rep, "free-q-closed-form", std::abs(quad_q - closed) <= 1e-10,
                  "|quad - closed| = " + fmt(std::abs(quad_q - closed)));
    });

    guarded(rep, "q0-independence", [&] {
        double worst = 0.0;
        double ref = 0.0;
        for (double q0 : {-5.0, -50.0, -500.0}) {
            const GaussianPacket p(q0, 1.0, 2.0);
            const double rk = refraction::well_refraction(p, 2.0, 1.0, spec).r_kappa;
            if (q0 == -5.0)
                ref = rk;
            else
                worst = std::max(worst, std::abs(rk - ref) / std::abs(ref));
        }
        add_check(rep, "q0-independence", worst <= 1e-12,
                  "max relative spread = " + fmt(worst));
    });

    guarded(rep, "term-bookkeeping", [&] {
        const GaussianPacket p(-60.0, 1.0, 2.0);
        const auto r = refraction::well_refraction(p, 2.0, 1.5, spec);
        const double resid = std::abs(r.total - (r.r_plus + r.r_minus + r.r_kappa));
        add_check(rep, "term-bookkeeping", resid <= 1e-12, "residual = " + fmt(resid));
    });

    return rep;
}

} // namespace welltime

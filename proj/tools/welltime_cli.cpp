// welltime command-line front end: single-point computations, parameter
// sweeps, figure-data CSV emission and the built-in selftest suite.
//
// Exit codes: 0 success; 1 selftest failure; 2 configuration/usage error;
// 3 numeric failure; 4 unwritable output path.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "welltime/config.hpp"
#include "welltime/refraction.hpp"
#include "welltime/selftest.hpp"
#include "welltime/sweep.hpp"
#include "welltime/traversal.hpp"

namespace {

using welltime::Config;

struct CommonOpts {
    std::optional<double> k0, sigma, kappa, V0, L, a, b, q0, tol;
    std::string config_path;

    void attach(CLI::App* cmd)
    {
        auto opt = [&](const char* name, std::optional<double>& slot, const char* desc) {
            cmd->add_option(name, slot, desc);
        };
        opt("--k0", k0, "mean wavenumber of the incident packet (a.u.)");
        opt("--sigma", sigma, "position-space packet width (a.u.)");
        opt("--kappa", kappa, "well wavenumber sqrt(2 mu V0)/hbar; overrides --V0");
        opt("--V0", V0, "well depth (a.u.)");
        opt("--L", L, "well width; sets a = b + L unless --a is given");
        opt("--a", a, "far well edge (well spans -a < q < -b)");
        opt("--b", b, "near well edge");
        opt("--q0", q0, "initial packet center (default: -(a + 8 sigma))");
        opt("--tol", tol, "quadrature tolerance (absolute and relative)");
        cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    }

    Config resolve() const
    {
        Config cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw welltime::config_error("cannot open config file '" + config_path + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            cfg = welltime::parse_config_json(ss.str(), cfg);
        }
        if (sigma) cfg.sigma = *sigma;
        if (k0) cfg.k0 = *k0;
        if (V0) cfg.V0 = *V0;
        if (kappa) cfg.V0 = welltime::depth_from_kappa(*kappa, cfg.constants);
        if (b) cfg.b = *b;
        if (a)
            cfg.a = *a;
        else if (L)
            cfg.a = cfg.b + *L;
        if (q0) cfg.q0 = *q0;
        cfg.validate();
        return cfg;
    }

    welltime::quad::QuadSpec quad_spec() const
    {
        welltime::quad::QuadSpec spec;
        if (tol) {
            spec.abs_tol = *tol;
            spec.rel_tol = *tol;
        }
        return spec;
    }
};

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw std::ios_base::failure("cannot open output path '" + path + "'");
    return file;
}

nlohmann::json refraction_json(const welltime::refraction::RefractionResult& r)
{
    const char* method = "momentum_space";
    if (r.method == welltime::refraction::RefractionMethod::ZetaOracle)
        method = "zeta_oracle";
    else if (r.method == welltime::refraction::RefractionMethod::DeepWellForm)
        method = "deep_well_form";
    return {{"r_plus", r.r_plus},   {"r_minus", r.r_minus},
            {"r_kappa", r.r_kappa}, {"total", r.total},
            {"q_free", r.q_free},   {"error_estimate", r.error_estimate},
            {"method", method}};
}

int cmd_refraction(const CommonOpts& opts, const std::string& out_path)
{
    const Config cfg = opts.resolve();
    const welltime::GaussianPacket p = cfg.packet();
    const auto r =
        welltime::refraction::well_refraction(p, cfg.k0, cfg.kappa(), opts.quad_spec());
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << refraction_json(r).dump(2) << "\n";
    return 0;
}

int cmd_traversal(const CommonOpts& opts, const std::string& out_path)
{
    const Config cfg = opts.resolve();
    const welltime::GaussianPacket p = cfg.packet();
    welltime::validate_packet_support(p, cfg.well());
    const auto t = welltime::traversal::traversal_times(p, cfg.k0, cfg.kappa(), cfg.width(),
                                                        cfg.constants, opts.quad_spec());
    const char* cls = "neutral";
    if (t.classification == welltime::traversal::Classification::Advanced)
        cls = "advanced";
    else if (t.classification == welltime::traversal::Classification::Delayed)
        cls = "delayed";
    nlohmann::json j = {{"tau_well", t.tau_well},
                        {"tau_free", t.tau_free},
                        {"delta_tau", t.delta_tau},
                        {"classical_tau", t.classical_tau},
                        {"classification", cls},
                        {"tolerance", t.tolerance},
                        {"refraction", refraction_json(t.refraction)}};
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"welltime: quantum traversal times across rectangular wells and barriers"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string out_path;
    int points = 0;
    int figure_id = 0;
    int threads = 0;
    std::vector<std::string> axis_specs;
    std::string quantity_name = "refraction";
    bool flip_branch = false;

    CLI::App* c_refr = app.add_subcommand("refraction", "effective index of refraction R");
    CLI::App* c_trav = app.add_subcommand("traversal", "traversal times and classification");
    CLI::App* c_fig = app.add_subcommand("figure", "figure-data reproduction as CSV");
    CLI::App* c_sweep = app.add_subcommand("sweep", "parameter sweep as CSV");
    CLI::App* c_self = app.add_subcommand("selftest", "internal consistency suites");

    for (CLI::App* cmd : {c_refr, c_trav, c_fig, c_sweep, c_self})
        opts.attach(cmd);
    for (CLI::App* cmd : {c_refr, c_trav, c_fig, c_sweep})
        cmd->add_option("--out", out_path, "output path (default stdout)");
    c_fig->add_option("--id", figure_id, "figure id (4..9)")->required();
    c_fig->add_option("--points", points, "grid points per axis (default 200)");
    c_fig->add_option("--threads", threads, "worker threads (default: hardware)");
    c_sweep->add_option("--axis", axis_specs, "axis spec name:min:max:count[:log|linear]")
        ->expected(1, 2);
    c_sweep->add_option("--quantity", quantity_name, "refraction | imz | deepwell");
    c_sweep->add_option("--threads", threads, "worker threads (default: hardware)");
    c_self->add_flag("--debug-flip-branch", flip_branch,
                     "negative control: flip the continuation branch sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_refr->parsed())
            return cmd_refraction(opts, out_path);
        if (c_trav->parsed())
            return cmd_traversal(opts, out_path);
        if (c_fig->parsed()) {
            const auto table =
                welltime::figure_table(figure_id, opts.resolve(), points, opts.quad_spec(),
                                       threads);
            std::ofstream file;
            std::ostream& os = open_output(out_path, file);
            table.write_csv(os);
            return 0;
        }
        if (c_sweep->parsed()) {
            if (axis_specs.empty())
                throw welltime::config_error("sweep: at least one --axis is required");
            std::vector<welltime::SweepAxis> axes;
            for (const auto& s : axis_specs)
                axes.push_back(welltime::parse_axis_spec(s));
            welltime::SweepQuantity q = welltime::SweepQuantity::RefractionTerms;
            if (quantity_name == "imz")
                q = welltime::SweepQuantity::ImZ;
            else if (quantity_name == "deepwell")
                q = welltime::SweepQuantity::DeepWell;
            else if (quantity_name != "refraction")
                throw welltime::config_error("sweep: unknown quantity '" + quantity_name + "'");
            const auto table = welltime::run_sweep(opts.resolve(), axes, q, opts.quad_spec(),
                                                   threads);
            std::ofstream file;
            std::ostream& os = open_output(out_path, file);
            table.write_csv(os);
            return 0;
        }
        if (c_self->parsed()) {
            const auto report = welltime::run_selftest(opts.quad_spec(), flip_branch);
            for (const auto& c : report.checks)
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
                          << "\n";
            return report.all_passed() ? 0 : 1;
        }
    } catch (const welltime::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

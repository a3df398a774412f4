#include "welltime/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "welltime/refraction.hpp"

namespace welltime {

double SweepAxis::at(int i) const
{
    if (count == 1)
        return min;
    const double t = static_cast<double>(i) / (count - 1);
    if (log_scale)
        return std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
    return min + t * (max - min);
}

void SweepAxis::validate() const
{
    if (name.empty())
        throw config_error("axis: empty name");
    if (count < 1)
        throw config_error("axis '" + name + "': count must be >= 1");
    if (!(max >= min))
        throw config_error("axis '" + name + "': max must be >= min");
    if (log_scale && !(min > 0.0))
        throw config_error("axis '" + name + "': log scale requires min > 0");
}

SweepAxis parse_axis_spec(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() < 4 || parts.size() > 5)
        throw config_error("axis spec must be name:min:max:count[:log|linear], got '" + text +
                           "'");
    SweepAxis ax;
    ax.name = parts[0];
    try {
        ax.min = std::stod(parts[1]);
        ax.max = std::stod(parts[2]);
        ax.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw config_error("axis spec: non-numeric field in '" + text + "'");
    }
    if (parts.size() == 5) {
        if (parts[4] == "log")
            ax.log_scale = true;
        else if (parts[4] != "linear")
            throw config_error("axis spec: scale must be 'log' or 'linear'");
    }
    ax.validate();
    return ax;
}

namespace {

struct RowResult {
    std::vector<double> cells;
    std::string status = "ok";
};

void apply_axis(Config& cfg, const std::string& name, double value)
{
    if (name == "k0")
        cfg.k0 = value;
    else if (name == "sigma")
        cfg.sigma = value;
    else if (name == "V0")
        cfg.V0 = value;
    else if (name == "kappa")
        cfg.V0 = depth_from_kappa(value, cfg.constants);
    else
        throw config_error("axis '" + name + "' is not sweepable for this quantity");
}

RowResult compute_row(const Config& cfg, SweepQuantity quantity,
                      const std::vector<std::pair<std::string, double>>& axis_values,
                      const quad::QuadSpec& spec)
{
    RowResult row;
    try {
        Config local = cfg;
        double u = local.sigma * local.kappa();
        double v = local.sigma * local.k0;
        for (const auto& [name, value] : axis_values) {
            if (name == "u")
                u = value;
            else if (name == "v")
                v = value;
            else
                apply_axis(local, name, value);
        }

        switch (quantity) {
        case SweepQuantity::RefractionTerms: {
            local.validate();
            const GaussianPacket p = local.packet();
            const auto r = refraction::well_refraction(p, local.k0, local.kappa(), spec);
            row.cells = {r.r_plus, r.r_minus, r.r_kappa, r.total, r.q_free, r.error_estimate};
            break;
        }
        case SweepQuantity::ImZ: {
            const auto z = refraction::deep_well_z(u, v, spec);
            row.cells = {z.imag(), z.real()};
            break;
        }
        case SweepQuantity::DeepWell: {
            local.validate();
            const GaussianPacket p = local.packet();
            const auto deep = refraction::deep_well_r_kappa(p, local.kappa(), spec);
            const double q = refraction::free_q_closed(p);
            row.cells = {q, deep.value, deep.log_abs / std::log(10.0),
                         deep.sign < 0.0 ? 1.0 : 0.0};
            if (deep.overflow)
                row.status = "overflow";
            break;
        }
        }
        for (double c : row.cells)
            if (!std::isfinite(c) && row.status == "ok")
                row.status = "overflow";
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

std::vector<std::string> quantity_columns(SweepQuantity q)
{
    switch (q) {
    case SweepQuantity::RefractionTerms:
        return {"r_plus", "r_minus", "r_kappa", "total", "q_free", "error_estimate"};
    case SweepQuantity::ImZ:
        return {"im_z", "re_z"};
    case SweepQuantity::DeepWell:
        return {"q_free", "r_kappa", "log10_abs_r_kappa", "r_kappa_negative"};
    }
    return {};
}

const char* quantity_name(SweepQuantity q)
{
    switch (q) {
    case SweepQuantity::RefractionTerms:
        return "refraction";
    case SweepQuantity::ImZ:
        return "imz";
    case SweepQuantity::DeepWell:
        return "deepwell";
    }
    return "?";
}

} // namespace

SweepTable run_sweep(const Config& base, const std::vector<SweepAxis>& axes,
                     SweepQuantity quantity, const quad::QuadSpec& spec, int threads)
{
    if (axes.empty() || axes.size() > 2)
        throw config_error("sweep: needs 1 or 2 axes");
    long total = 1;
    for (const auto& ax : axes) {
        ax.validate();
        total *= ax.count;
    }
    if (total > 1000000)
        throw config_error("sweep: grid exceeds 10^6 points");

    SweepTable table;
    table.axes = axes;
    for (const auto& ax : axes)
        table.columns.push_back(ax.name);
    for (const auto& col : quantity_columns(quantity))
        table.columns.push_back(col);
    table.metadata.push_back("welltime sweep");
    table.metadata.push_back("config " + config_to_json(base));
    for (const auto& ax : axes) {
        std::ostringstream os;
        os << "axis " << ax.name << (ax.log_scale ? " log " : " linear ") << ax.min << " "
           << ax.max << " " << ax.count;
        table.metadata.push_back(os.str());
    }
    table.metadata.push_back(std::string("quantity ") + quantity_name(quantity));

    table.rows.assign(total, {});
    table.status.assign(total, "ok");

    const int inner = axes.size() == 2 ? axes[1].count : 1;
    auto work = [&](long idx) {
        const int i0 = static_cast<int>(idx / inner);
        const int i1 = static_cast<int>(idx % inner);
        std::vector<std::pair<std::string, double>> values;
        values.emplace_back(axes[0].name, axes[0].at(i0));
        if (axes.size() == 2)
            values.emplace_back(axes[1].name, axes[1].at(i1));
        RowResult r = compute_row(base, quantity, values, spec);
        std::vector<double> cells;
        for (const auto& [name, v] : values)
            cells.push_back(v);
        cells.insert(cells.end(), r.cells.begin(), r.cells.end());
        cells.resize(table.columns.size(), std::numeric_limits<double>::quiet_NaN());
        table.rows[idx] = std::move(cells);
        table.status[idx] = std::move(r.status);
    };

    int n_workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    n_workers = std::max(1, std::min<long>(n_workers, total));
    if (n_workers == 1) {
        for (long i = 0; i < total; ++i)
            work(i);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    const long i = next.fetch_add(1);
                    if (i >= total)
                        return;
                    work(i);
                }
            });
        for (auto& t : pool)
            t.join();
    }
    return table;
}

void SweepTable::write_csv(std::ostream& os) const
{
    for (const auto& line : metadata)
        os << "# " << line << "\n";
    for (size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << ",";
    os << "status\n";
    char buf[40];
    for (size_t r = 0; r < rows.size(); ++r) {
        for (double v : rows[r]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << buf << ",";
        }
        os << status[r] << "\n";
    }
}

SweepTable SweepTable::read_csv(std::istream& is)
{
    SweepTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            t.metadata.push_back(line.substr(start));
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ','))
            fields.push_back(item);
        if (!have_header) {
            if (fields.empty() || fields.back() != "status")
                throw config_error("csv: header must end with 'status'");
            t.columns.assign(fields.begin(), fields.end() - 1);
            have_header = true;
            continue;
        }
        if (fields.size() != t.columns.size() + 1)
            throw config_error("csv: row width mismatch");
        std::vector<double> cells;
        cells.reserve(t.columns.size());
        for (size_t i = 0; i + 1 < fields.size(); ++i)
            cells.push_back(std::strtod(fields[i].c_str(), nullptr));
        t.rows.push_back(std::move(cells));
        t.status.push_back(fields.back());
    }
    if (!have_header)
        throw config_error("csv: missing header row");
    return t;
}

SweepTable figure_table(int id, const Config& base, int points, const quad::QuadSpec& spec,
                        int threads)
{
    const int n = points > 0 ? points : 200;
    Config cfg = base;
    std::vector<SweepAxis> axes;
    SweepQuantity quantity = SweepQuantity::RefractionTerms;

    switch (id) {
    case 4: // terms of R vs sigma at k0 = 5, kappa = 1
        cfg.k0 = 5.0;
        cfg.V0 = depth_from_kappa(1.0, cfg.constants);
        axes.push_back({"sigma", 0.05, 4.0, n, false});
        break;
    case 5: // terms of R vs k0 at sigma = 1/10, kappa = 5
        cfg.sigma = 0.1;
        cfg.V0 = depth_from_kappa(5.0, cfg.constants);
        axes.push_back({"k0", 0.5, 15.0, n, false});
        break;
    case 6: // terms of R vs sigma at k0 = kappa = 5
        cfg.k0 = 5.0;
        cfg.V0 = depth_from_kappa(5.0, cfg.constants);
        axes.push_back({"sigma", 0.2, 2.0, n, false});
        break;
    case 7: // Im z vs u at v = 1
        cfg.sigma = 1.0;
        cfg.k0 = 1.0;
        quantity = SweepQuantity::ImZ;
        axes.push_back({"u", 1.0, 10.0, n, false});
        break;
    case 8: // Im z surface over (u, v)
        quantity = SweepQuantity::ImZ;
        axes.push_back({"u", 1.0, 10.0, n, false});
        axes.push_back({"v", 0.5, 3.0, n, false});
        break;
    case 9: // Q vs R_kappa in log scale across kappa (deep wells)
        cfg.k0 = 1.0;
        cfg.sigma = 1.0;
        quantity = SweepQuantity::DeepWell;
        axes.push_back({"kappa", 0.5, 10.0, n, false});
        break;
    default:
        throw config_error("figure: id must be one of 4,5,6,7,8,9");
    }

    SweepTable t = run_sweep(cfg, axes, quantity, spec, threads);
    t.metadata.insert(t.metadata.begin(), "figure " + std::to_string(id));
    return t;
}

} // namespace welltime

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "welltime/config.hpp"
#include "welltime/quadrature.hpp"

namespace welltime {

struct SweepAxis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log_scale = false;

    double at(int i) const;
    void validate() const;
};

/// Parses "name:min:max:count[:log|linear]".
SweepAxis parse_axis_spec(const std::string& text);

enum class SweepQuantity { RefractionTerms, ImZ, DeepWell };

// Grid of computed rows over <= 2 axes.  Rows are ordered by axis index
// (outer axis slowest); a non-"ok" status flags any row whose numeric cells
// are not all finite.
struct SweepTable {
    std::vector<SweepAxis> axes;
    std::vector<std::string> columns;      // includes the leading axis columns
    std::vector<std::vector<double>> rows; // numeric cells only
    std::vector<std::string> status;       // one entry per row
    std::vector<std::string> metadata;     // '#'-prefixed header lines (without '#')

    // CSV with '#'-prefixed metadata, 17-significant-digit cells; re-parsing
    // reproduces the numeric values bit-exactly.
    void write_csv(std::ostream& os) const;
    static SweepTable read_csv(std::istream& is);
};

// Evaluates `quantity` over the axis grid; axis names select which config
// field each axis drives (k0, sigma, kappa, V0 -- or u, v for the ImZ
// surface).  Rows are computed in parallel; output is ordered by grid index
// regardless of the worker count.
SweepTable run_sweep(const Config& base, const std::vector<SweepAxis>& axes,
                     SweepQuantity quantity, const quad::QuadSpec& spec, int threads = 0);

// Figure-data presets (figure ids 4..9); `points` <= 0 keeps the default
// 200 per axis.  The base config supplies any parameters the preset does not
// pin.
SweepTable figure_table(int id, const Config& base, int points, const quad::QuadSpec& spec,
                        int threads = 0);

} // namespace welltime

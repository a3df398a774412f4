#pragma once

#include <optional>
#include <string>

#include "welltime/domain.hpp"
#include "welltime/packet.hpp"

namespace welltime {

/// Raised on malformed or unknown configuration input (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resolved problem configuration.  All quantities in the unit system of
// `constants` (atomic units unless overridden).
struct Config {
    PhysicalConstants constants{};
    double V0 = 0.5;
    double a = 3.0;
    double b = 1.0;
    double k0 = 5.0;
    double sigma = 1.0;
    std::optional<double> q0; // absent -> placed at -(a + 8 sigma)

    double kappa() const;
    double width() const { return a - b; }
    WellGeometry well() const { return WellGeometry(V0, a, b); }
    GaussianPacket packet() const;
    double resolved_q0() const { return q0 ? *q0 : -(a + 8.0 * sigma); }

    void validate() const;
};

// Parses the JSON config block {"mass","hbar","V0","a","b","k0","sigma","q0"}.
// Absent keys keep their defaults; unknown keys are a hard error.
Config parse_config_json(const std::string& text, Config base = {});

/// JSON echo of a config (used for CSV metadata headers and --config round-trips).
std::string config_to_json(const Config& cfg);

} // namespace welltime

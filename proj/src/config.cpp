#include "welltime/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace welltime {

double Config::kappa() const
{
    return welltime::kappa(well(), constants);
}

GaussianPacket Config::packet() const
{
    return GaussianPacket(resolved_q0(), sigma, k0);
}

void Config::validate() const
{
    if (!(constants.mass > 0.0) || !(constants.hbar > 0.0))
        throw config_error("config: mass and hbar must be > 0");
    if (V0 < 0.0)
        throw config_error("config: V0 must be >= 0");
    if (!(b > 0.0) || !(a > b))
        throw config_error("config: requires a > b > 0");
    if (!(sigma > 0.0))
        throw config_error("config: sigma must be > 0");
    if (!(k0 > 0.0))
        throw config_error("config: k0 must be > 0");
}

Config parse_config_json(const std::string& text, Config base)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config: JSON parse failure: ") + e.what());
    }
    if (!j.is_object())
        throw config_error("config: top level must be a JSON object");

    static const std::set<std::string> known = {"mass", "hbar", "V0", "a",
                                                "b",    "k0",   "sigma", "q0"};
    for (const auto& [key, value] : j.items()) {
        if (known.count(key) == 0)
            throw config_error("config: unknown key '" + key + "'");
        if (!value.is_number())
            throw config_error("config: key '" + key + "' must be a number");
    }

    Config cfg = base;
    double mass = cfg.constants.mass;
    double hbar = cfg.constants.hbar;
    if (j.contains("mass")) mass = j["mass"].get<double>();
    if (j.contains("hbar")) hbar = j["hbar"].get<double>();
    try {
        cfg.constants = PhysicalConstants(mass, hbar);
    } catch (const std::exception& e) {
        throw config_error(std::string("config: ") + e.what());
    }
    if (j.contains("V0")) cfg.V0 = j["V0"].get<double>();
    if (j.contains("a")) cfg.a = j["a"].get<double>();
    if (j.contains("b")) cfg.b = j["b"].get<double>();
    if (j.contains("k0")) cfg.k0 = j["k0"].get<double>();
    if (j.contains("sigma")) cfg.sigma = j["sigma"].get<double>();
    if (j.contains("q0")) cfg.q0 = j["q0"].get<double>();
    cfg.validate();
    return cfg;
}

std::string config_to_json(const Config& cfg)
{
    nlohmann::json j;
    j["mass"] = cfg.constants.mass;
    j["hbar"] = cfg.constants.hbar;
    j["V0"] = cfg.V0;
    j["a"] = cfg.a;
    j["b"] = cfg.b;
    j["k0"] = cfg.k0;
    j["sigma"] = cfg.sigma;
    j["q0"] = cfg.resolved_q0();
    return j.dump();
}

} // namespace welltime

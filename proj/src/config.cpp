#include "nuosc/config.hpp"

#include "nuosc/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace nuosc {

namespace {

constexpr double deg = std::numbers::pi / 180.0;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value, int line)
{
    const char* begin = value.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw config_error(key + ": not a number: '" + value + "'", line);
    return x;
}

int parse_int(const std::string& key, const std::string& value, int line)
{
    const char* begin = value.c_str();
    char* end = nullptr;
    const long x = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw config_error(key + ": not an integer: '" + value + "'", line);
    return static_cast<int>(x);
}

double parse_angle(const std::string& key, const std::string& value, int line,
                   double limit_deg)
{
    const double a = parse_double(key, value, line);
    if (!std::isfinite(a) || a < 0.0 || a >= limit_deg)
        throw config_error(key + " must lie in [0, " + std::to_string(int(limit_deg)) + ")",
                           line);
    return a * deg;
}

} // namespace

RunConfig default_run_config()
{
    RunConfig cfg;
    cfg.params = default_params();
    return cfg;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   int line)
{
    if (value.empty())
        throw config_error(key + ": empty value", line);

    if (key == "theta12_deg")
        cfg.params.theta12 = parse_angle(key, value, line, 90.0);
    else if (key == "theta13_deg")
        cfg.params.theta13 = parse_angle(key, value, line, 90.0);
    else if (key == "theta23_deg")
        cfg.params.theta23 = parse_angle(key, value, line, 90.0);
    else if (key == "delta_deg")
        cfg.params.delta_cp = parse_angle(key, value, line, 360.0);
    else if (key == "dm21_sq_eV2") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x <= 0.0)
            throw config_error("dm21_sq_eV2 must be positive", line);
        cfg.params.dm21_sq = x;
    } else if (key == "dm31_sq_eV2") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x == 0.0)
            throw config_error("dm31_sq_eV2 must be nonzero", line);
        cfg.params.dm31_sq = x;
    } else if (key == "energy_eV") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x <= 0.0)
            throw config_error("energy_eV must be positive", line);
        cfg.energy_eV = x;
    } else if (key == "sigma_x_m") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x <= 0.0)
            throw config_error("sigma_x_m must be positive", line);
        cfg.wp.sigma_x_m = x;
    } else if (key == "rho") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x < 0.0)
            throw config_error("rho must be non-negative", line);
        cfg.wp.rho = x;
    } else if (key == "baseline_m") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x < 0.0)
            throw config_error("baseline_m must be non-negative", line);
        cfg.baseline_m = x;
    } else if (key == "potential_eV") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x) || x < 0.0)
            throw config_error("potential_eV must be non-negative", line);
        if (!cfg.potentials_explicit) {
            cfg.potentials_eV.clear();
            cfg.potentials_explicit = true;
        }
        cfg.potentials_eV.push_back(x);
    } else if (key == "scan") {
        if (value == "baseline")
            cfg.sweep.axis = ScanAxis::baseline;
        else if (value == "potential")
            cfg.sweep.axis = ScanAxis::potential;
        else if (value == "energy")
            cfg.sweep.axis = ScanAxis::energy;
        else
            throw config_error("scan must be baseline, potential or energy", line);
    } else if (key == "min") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x))
            throw config_error("min must be finite", line);
        cfg.sweep.min = x;
    } else if (key == "max") {
        const double x = parse_double(key, value, line);
        if (!std::isfinite(x))
            throw config_error("max must be finite", line);
        cfg.sweep.max = x;
    } else if (key == "points") {
        const int n = parse_int(key, value, line);
        if (n < 2)
            throw config_error("points must be an integer >= 2", line);
        cfg.sweep.points = n;
    } else if (key == "spacing") {
        if (value == "linear")
            cfg.sweep.spacing = Spacing::linear;
        else if (value == "log")
            cfg.sweep.spacing = Spacing::log;
        else
            throw config_error("spacing must be linear or log", line);
    } else if (key == "flavor") {
        if (value == "e")
            cfg.flavor = Flavor::e;
        else if (value == "mu")
            cfg.flavor = Flavor::mu;
        else if (value == "tau")
            cfg.flavor = Flavor::tau;
        else
            throw config_error("flavor must be e, mu or tau", line);
    } else if (key == "kind") {
        if (value == "neutrino")
            cfg.kind = ParticleKind::neutrino;
        else if (value == "antineutrino")
            cfg.kind = ParticleKind::antineutrino;
        else
            throw config_error("kind must be neutrino or antineutrino", line);
    } else if (key == "mode") {
        if (value == "pw")
            cfg.wp.mode = TreatmentMode::plane_wave;
        else if (value == "wp")
            cfg.wp.mode = TreatmentMode::wave_packet;
        else
            throw config_error("mode must be pw or wp", line);
    } else if (key == "output") {
        cfg.output = value;
    } else {
        throw config_error("unknown key '" + key + "'", line);
    }
}

void finalize_run_config(const RunConfig& cfg)
{
    try {
        validate(cfg.params);
    } catch (const domain_error& e) {
        throw config_error(e.what());
    }
    if (cfg.sweep.min >= cfg.sweep.max)
        throw config_error("scan min must be less than max");
    if (cfg.sweep.spacing == Spacing::log && cfg.sweep.min <= 0.0)
        throw config_error("log spacing requires min > 0");
    if (cfg.potentials_eV.empty())
        throw config_error("at least one potential_eV is required");
}

RunConfig parse_config(const std::string& text)
{
    RunConfig cfg = default_run_config();

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string stripped = trim(raw);
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("expected 'key = value'", line);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw config_error("missing key before '='", line);
        apply_setting(cfg, key, value, line);
    }
    finalize_run_config(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

const char* to_string(ScanAxis axis)
{
    switch (axis) {
    case ScanAxis::baseline: return "baseline";
    case ScanAxis::potential: return "potential";
    default: return "energy";
    }
}

const char* to_string(Spacing spacing)
{
    return spacing == Spacing::linear ? "linear" : "log";
}

const char* to_string(Flavor flavor)
{
    switch (flavor) {
    case Flavor::e: return "e";
    case Flavor::mu: return "mu";
    default: return "tau";
    }
}

const char* to_string(ParticleKind kind)
{
    return kind == ParticleKind::neutrino ? "neutrino" : "antineutrino";
}

const char* to_string(TreatmentMode mode)
{
    return mode == TreatmentMode::plane_wave ? "pw" : "wp";
}

} // namespace nuosc

#pragma once

#include "nuosc/coherence.hpp"
#include "nuosc/params.hpp"
#include "nuosc/wavepacket.hpp"

#include <string>
#include <vector>

namespace nuosc {

enum class Spacing { linear, log };

/// Scan axis plus grid; the quantities not being scanned keep the fixed
/// values held by RunConfig.
struct SweepSpec {
    ScanAxis axis = ScanAxis::baseline;
    double min = 1e13;
    double max = 1e18;
    int points = 1000;
    Spacing spacing = Spacing::log;
};

/// Complete description of one CLI run. Defaults reproduce the electron
/// survival scan over baseline with the standard five-potential curve set.
struct RunConfig {
    OscillationParams params;
    WavePacketConfig wp;
    double energy_eV = 4.5e10;
    double baseline_m = 1e15; // fixed baseline for potential and energy scans
    std::vector<double> potentials_eV{0.0, 2.242e-15, 1.099e-14, 2.824e-14, 1e-12};
    SweepSpec sweep;
    Flavor flavor = Flavor::e;
    ParticleKind kind = ParticleKind::neutrino;
    std::string output; // CSV path; empty means stdout

    // False until an explicit potential_eV arrives; the first one replaces
    // the default list, later ones append. Reset before applying CLI
    // overrides so command-line potentials replace the config's list too.
    bool potentials_explicit = false;
};

RunConfig default_run_config();

/// Apply one key = value setting. Angles arrive in degrees and are stored in
/// radians. line is used for error reporting only (0 for CLI overrides).
/// The first potential_eV replaces the default list; later ones append.
/// Throws config_error for unknown keys, malformed values and out-of-range
/// single-key values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   int line);

/// Cross-field validation (min < max, log spacing needs min > 0, parameter
/// ranges). Throws config_error.
void finalize_run_config(const RunConfig& cfg);

/// Parse `key = value` text with # comments and blank lines. Missing keys
/// keep their defaults; errors carry 1-based line numbers.
RunConfig parse_config(const std::string& text);

/// parse_config applied to a file's contents; I/O failure is a config_error
/// naming the path.
RunConfig parse_config_file(const std::string& path);

const char* to_string(ScanAxis axis);
const char* to_string(Spacing spacing);
const char* to_string(Flavor flavor);
const char* to_string(ParticleKind kind);
const char* to_string(TreatmentMode mode);

} // namespace nuosc

#include "nuosc/config.hpp"
#include "nuosc/errors.hpp"
#include "nuosc/sweep.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CliSettings {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::vector<std::string> potentials;
};

void add_common_options(CLI::App* sub, CliSettings& cli)
{
    sub->add_option("--config", cli.config_path,
                    "Config file with 'key = value' lines and # comments");

    static const std::pair<const char*, const char*> keys[] = {
        {"theta12_deg", "12 mixing angle in degrees, [0, 90)"},
        {"theta13_deg", "13 mixing angle in degrees, [0, 90)"},
        {"theta23_deg", "23 mixing angle in degrees, [0, 90)"},
        {"delta_deg", "CP phase in degrees, [0, 360)"},
        {"dm21_sq_eV2", "m2^2 - m1^2 in eV^2, > 0"},
        {"dm31_sq_eV2", "m3^2 - m1^2 in eV^2, nonzero"},
        {"energy_eV", "Neutrino energy in eV"},
        {"sigma_x_m", "Wave-packet width in meters"},
        {"rho", "Localization-term scale (dimensionless)"},
        {"baseline_m", "Fixed baseline in meters for potential and energy scans"},
        {"scan", "Scan axis: baseline | potential | energy"},
        {"min", "Scan start (meters for baseline, eV otherwise)"},
        {"max", "Scan end (meters for baseline, eV otherwise)"},
        {"points", "Number of grid points, >= 2"},
        {"spacing", "Grid spacing: linear | log"},
        {"flavor", "Initial flavor: e | mu | tau"},
        {"kind", "neutrino | antineutrino"},
        {"mode", "pw (plane wave) | wp (wave packet)"},
        {"output", "CSV output path (default: stdout)"},
    };
    for (const auto& [key, desc] : keys) {
        sub->add_option_function<std::string>(
            std::string("--") + key,
            [&cli, key = std::string(key)](const std::string& value) {
                cli.overrides.emplace_back(key, value);
            },
            desc);
    }
    sub->add_option("--potential_eV", cli.potentials,
                    "Matter potential in eV (repeatable; replaces the configured list)");
}

nuosc::RunConfig assemble_config(const CliSettings& cli)
{
    nuosc::RunConfig cfg = cli.config_path.empty()
                               ? nuosc::default_run_config()
                               : nuosc::parse_config_file(cli.config_path);
    for (const auto& [key, value] : cli.overrides)
        nuosc::apply_setting(cfg, key, value, 0);
    if (!cli.potentials.empty()) {
        cfg.potentials_explicit = false;
        for (const std::string& v : cli.potentials)
            nuosc::apply_setting(cfg, "potential_eV", v, 0);
    }
    nuosc::finalize_run_config(cfg);
    return cfg;
}

void emit(const nuosc::Table& table, const nuosc::RunConfig& cfg)
{
    if (cfg.output.empty())
        nuosc::write_csv(table, std::cout);
    else
        nuosc::write_csv(table, cfg.output);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "Three-flavor neutrino oscillation probabilities, coherence lengths and "
        "l1-norm coherence in vacuum and uniform matter, with plane-wave and "
        "wave-packet treatments. Lengths are meters, energies and potentials eV, "
        "angles degrees; CSV goes to stdout unless output is set."};
    app.require_subcommand(1);

    CliSettings cli;
    CLI::App* prob = app.add_subcommand(
        "prob-scan", "Probability row of the initial flavor along the configured scan");
    CLI::App* l1 = app.add_subcommand(
        "l1-scan", "l1-norm coherence along the configured scan");
    CLI::App* special = app.add_subcommand(
        "special-potentials",
        "Resonance potentials and the potentials with infinite coherence length");
    CLI::App* lengths = app.add_subcommand(
        "lengths",
        "Oscillation and coherence lengths per pair over a potential grid");
    for (CLI::App* sub : {prob, l1, special, lengths})
        add_common_options(sub, cli);

    try {
        app.parse(argc, argv);

        const nuosc::RunConfig cfg = assemble_config(cli);
        nuosc::Table table;
        if (app.got_subcommand(prob))
            table = nuosc::run_prob_sweep(cfg);
        else if (app.got_subcommand(l1))
            table = nuosc::run_l1_sweep(cfg);
        else if (app.got_subcommand(special))
            table = nuosc::report_special_potentials(cfg);
        else
            table = nuosc::run_length_sweep(cfg);
        emit(table, cfg);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nuosc::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    }
}

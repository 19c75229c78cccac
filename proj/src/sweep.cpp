#include "nuosc/sweep.hpp"

#include "nuosc/errors.hpp"
#include "nuosc/kinematics.hpp"
#include "nuosc/probability.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>

namespace nuosc {

namespace {

// Fallback potential grid for the lengths report when the configured scan
// walks some other axis.
const SweepSpec length_default_grid{ScanAxis::potential, 1e-18, 1e-11, 400, Spacing::log};

struct AxisPoint {
    double axis_value;
    double baseline_m;
    double energy_eV;
    double potential_eV;
};

// Baseline and energy scans produce one block per configured potential in
// list order; a potential scan is a single block over the grid itself.
std::vector<AxisPoint> scan_points(const RunConfig& cfg)
{
    const std::vector<double> grid = make_grid(cfg.sweep);
    std::vector<AxisPoint> pts;
    if (cfg.sweep.axis == ScanAxis::potential) {
        pts.reserve(grid.size());
        for (double v : grid)
            pts.push_back({v, cfg.baseline_m, cfg.energy_eV, v});
        return pts;
    }
    pts.reserve(grid.size() * cfg.potentials_eV.size());
    for (double v : cfg.potentials_eV)
        for (double x : grid) {
            const double l = cfg.sweep.axis == ScanAxis::baseline ? x : cfg.baseline_m;
            const double e = cfg.sweep.axis == ScanAxis::energy ? x : cfg.energy_eV;
            pts.push_back({x, l, e, v});
        }
    return pts;
}

} // namespace

std::string format_number(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::vector<double> make_grid(const SweepSpec& spec)
{
    std::vector<double> grid(spec.points);
    const int n = spec.points - 1;
    if (spec.spacing == Spacing::linear) {
        for (int k = 1; k < n; ++k)
            grid[k] = spec.min + (spec.max - spec.min) * k / n;
    } else {
        const double la = std::log(spec.min);
        const double lb = std::log(spec.max);
        for (int k = 1; k < n; ++k)
            grid[k] = std::exp(la + (lb - la) * k / n);
    }
    grid.front() = spec.min;
    grid.back() = spec.max;
    return grid;
}

Table run_prob_sweep(const RunConfig& cfg)
{
    Table t;
    t.header = {"axis_value", "V_eV", "E_eV", "mode", "kind", "P_e", "P_mu", "P_tau"};
    for (const AxisPoint& pt : scan_points(cfg)) {
        const std::array<double, 3> row =
            probability_row(cfg.params, cfg.wp, cfg.flavor, pt.baseline_m, pt.energy_eV,
                            pt.potential_eV, cfg.kind);
        t.rows.push_back({format_number(pt.axis_value), format_number(pt.potential_eV),
                          format_number(pt.energy_eV), to_string(cfg.wp.mode),
                          to_string(cfg.kind), format_number(row[0]), format_number(row[1]),
                          format_number(row[2])});
    }
    return t;
}

Table run_l1_sweep(const RunConfig& cfg)
{
    Table t;
    t.header = {"axis_value", "V_eV", "E_eV", "mode", "kind", "c_l1"};
    for (const AxisPoint& pt : scan_points(cfg)) {
        const std::array<double, 3> row =
            probability_row(cfg.params, cfg.wp, cfg.flavor, pt.baseline_m, pt.energy_eV,
                            pt.potential_eV, cfg.kind);
        t.rows.push_back({format_number(pt.axis_value), format_number(pt.potential_eV),
                          format_number(pt.energy_eV), to_string(cfg.wp.mode),
                          to_string(cfg.kind), format_number(l1_from_probabilities(row))});
    }
    return t;
}

Table run_length_sweep(const RunConfig& cfg)
{
    const SweepSpec grid_spec =
        cfg.sweep.axis == ScanAxis::potential ? cfg.sweep : length_default_grid;
    Table t;
    t.header = {"V_eV", "pair", "L_osc_m", "L_coh_m"};
    for (double v : make_grid(grid_spec)) {
        const std::array<PairLengths, 3> lengths =
            matter_lengths(cfg.params, cfg.energy_eV, v, cfg.kind, cfg.wp);
        for (const PairLengths& pl : lengths)
            t.rows.push_back({format_number(v), std::to_string(pl.pair),
                              format_number(pl.l_osc_m), format_number(pl.l_coh_m)});
    }
    return t;
}

Table report_special_potentials(const RunConfig& cfg)
{
    constexpr double quarter_pi = std::numbers::pi / 4.0;
    Table t;
    t.header = {"label", "V_eV", "residual"};

    const ResonancePotentials res =
        find_resonance_potentials(cfg.params, cfg.energy_eV, cfg.kind);
    t.rows.push_back(
        {"res1_theta12m", format_number(res.v_res1),
         format_number(theta12_matter(cfg.params, cfg.energy_eV, res.v_res1, cfg.kind)
                       - quarter_pi)});
    t.rows.push_back(
        {"res2_theta13m", format_number(res.v_res2),
         format_number(theta13_matter(cfg.params, cfg.energy_eV, res.v_res2, cfg.kind)
                       - quarter_pi)});

    for (const CoherenceRoot& root :
         find_infinite_coherence_potentials(cfg.params, cfg.energy_eV, cfg.kind)) {
        const VelocityDifferences dv =
            velocity_differences(cfg.params, cfg.energy_eV, root.potential, cfg.kind);
        const double residual =
            root.pair == 21 ? dv.dv21 : root.pair == 32 ? dv.dv32 : dv.dv31;
        t.rows.push_back({"zero_dv" + std::to_string(root.pair),
                          format_number(root.potential), format_number(residual)});
    }
    return t;
}

void write_csv(const Table& table, std::ostream& out)
{
    for (size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

void write_csv(const Table& table, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw config_error("cannot open output file: " + path);
    write_csv(table, out);
    out.flush();
    if (!out)
        throw config_error("failed writing output file: " + path);
}

} // namespace nuosc

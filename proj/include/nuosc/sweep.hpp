#pragma once

#include "nuosc/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nuosc {

/// CSV-ready table: a header and stringified rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Format a double with 17 significant digits (%.16e); infinities become the
/// literal token "inf".
std::string format_number(double x);

/// Ascending scan grid with exact endpoints.
std::vector<double> make_grid(const SweepSpec& spec);

/// Probability row of cfg.flavor along the scan. Baseline and energy scans
/// emit one block per configured potential, in list order; potential scans
/// are a single block.
Table run_prob_sweep(const RunConfig& cfg);

/// l1 coherence along the scan, same row layout as run_prob_sweep.
Table run_l1_sweep(const RunConfig& cfg);

/// Oscillation and coherence lengths per pair over a potential grid (the
/// sweep grid when the scan axis is potential, else a default log grid over
/// [1e-18, 1e-11] eV).
Table run_length_sweep(const RunConfig& cfg);

/// Resonance potentials and infinite-coherence-length potentials with their
/// defining residuals.
Table report_special_potentials(const RunConfig& cfg);

void write_csv(const Table& table, std::ostream& out);

/// Write to a file, creating or truncating it; failures raise config_error
/// naming the path.
void write_csv(const Table& table, const std::string& path);

} // namespace nuosc

#pragma once

#include "nuosc/params.hpp"
#include "nuosc/wavepacket.hpp"

#include <array>
#include <vector>

namespace nuosc {

/// Which quantity a scan walks over; the other two stay at their fixed values.
enum class ScanAxis { baseline, potential, energy };

/// Flavor-basis density matrix of a state produced as the given initial
/// flavor.
struct FlavorDensityMatrix {
    ComplexMatrix3 rho;
    Flavor initial;
    double baseline_m;
    double energy_eV;
    double potential_eV;
    ParticleKind kind;
};

/// Sum of the absolute values of the off-diagonal entries. For a
/// three-dimensional state this lies in [0, 2].
double l1_norm(const FlavorDensityMatrix& dm);

/// l1 coherence reconstructed from one probability row:
/// c = 2 (sqrt(P1 P2) + sqrt(P1 P3) + sqrt(P2 P3)). Entries may undershoot 0
/// or overshoot 1 by at most 1e-12 (they are clipped); anything worse is a
/// domain error.
double l1_from_probabilities(const std::array<double, 3>& row);

/// Pure-state density matrix of the plane-wave evolved flavor state, from the
/// amplitude row A_b = sum_i U*_ai exp(-i e_i L) U_bi. Its diagonal is the
/// plane-wave probability row and its l1 norm matches
/// l1_from_probabilities of that diagonal exactly in exact arithmetic.
FlavorDensityMatrix plane_wave_density_matrix(const OscillationParams& p, Flavor alpha,
                                              double baseline_m, double energy,
                                              double potential, ParticleKind kind);

struct ScanPoint {
    double axis_value;
    double c_l1;
};

/// l1 coherence along a grid of baseline, potential or energy values, with
/// the probability row computed in the mode requested by wp. The fixed
/// baseline/energy/potential arguments supply the non-scanned quantities.
std::vector<ScanPoint> l1_scan(const OscillationParams& p, const WavePacketConfig& wp,
                               Flavor alpha, ScanAxis axis,
                               const std::vector<double>& grid, double baseline_m,
                               double energy, double potential, ParticleKind kind);

} // namespace nuosc

#include "nuosc/coherence.hpp"

#include "nuosc/errors.hpp"
#include "nuosc/matter.hpp"
#include "nuosc/probability.hpp"
#include "nuosc/units.hpp"

#include <cmath>
#include <complex>

namespace nuosc {

double l1_norm(const FlavorDensityMatrix& dm)
{
    double c = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                c += std::abs(dm.rho(i, j));
    return c;
}

double l1_from_probabilities(const std::array<double, 3>& row)
{
    std::array<double, 3> q = row;
    for (auto& v : q) {
        if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
            throw domain_error("l1_from_probabilities: entry outside [-1e-12, 1+1e-12]");
        v = std::min(1.0, std::max(0.0, v));
    }
    return 2.0 * (std::sqrt(q[0] * q[1]) + std::sqrt(q[0] * q[2]) + std::sqrt(q[1] * q[2]));
}

FlavorDensityMatrix plane_wave_density_matrix(const OscillationParams& p, Flavor alpha,
                                              double baseline_m, double energy,
                                              double potential, ParticleKind kind)
{
    if (!std::isfinite(baseline_m) || baseline_m < 0.0)
        throw domain_error("baseline must be finite and non-negative");
    if (!std::isfinite(energy) || energy <= 0.0)
        throw domain_error("energy must be positive");

    ComplexMatrix3 u;
    std::array<double, 3> energies;
    if (potential == 0.0 && kind == ParticleKind::neutrino) {
        u = build_pmns(p, kind);
        energies = {0.0, p.dm21_sq / (2.0 * energy), p.dm31_sq / (2.0 * energy)};
    } else {
        const MatterEigenSystem sys = matter_eigensystem(p, energy, potential, kind);
        u = sys.mixing;
        energies = {sys.e1m, sys.e2m, sys.e3m};
    }

    const double l_nat = length_to_natural(baseline_m);
    const int a = flavor_index(alpha);
    // A produced flavor alpha is sum_i U*_ai |i>, so the evolved amplitude on
    // flavor b carries conj(U) on the production side and U on detection.
    std::array<std::complex<double>, 3> amp{};
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i)
            amp[b] += std::conj(u(a, i)) * std::polar(1.0, -energies[i] * l_nat) * u(b, i);

    FlavorDensityMatrix dm;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            dm.rho(i, j) = amp[i] * std::conj(amp[j]);
    dm.initial = alpha;
    dm.baseline_m = baseline_m;
    dm.energy_eV = energy;
    dm.potential_eV = potential;
    dm.kind = kind;
    return dm;
}

std::vector<ScanPoint> l1_scan(const OscillationParams& p, const WavePacketConfig& wp,
                               Flavor alpha, ScanAxis axis,
                               const std::vector<double>& grid, double baseline_m,
                               double energy, double potential, ParticleKind kind)
{
    std::vector<ScanPoint> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const double l = axis == ScanAxis::baseline ? x : baseline_m;
        const double e = axis == ScanAxis::energy ? x : energy;
        const double v = axis == ScanAxis::potential ? x : potential;
        const std::array<double, 3> row = probability_row(p, wp, alpha, l, e, v, kind);
        out.push_back(ScanPoint{x, l1_from_probabilities(row)});
    }
    return out;
}

} // namespace nuosc

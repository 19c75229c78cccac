#include "nuosc/probability.hpp"

#include "nuosc/errors.hpp"
#include "nuosc/matter.hpp"
#include "nuosc/units.hpp"

#include <cmath>
#include <complex>

namespace nuosc {

namespace {

void check_baseline(double baseline_m)
{
    if (!std::isfinite(baseline_m) || baseline_m < 0.0)
        throw domain_error("baseline must be finite and non-negative");
}

void check_energy(double energy)
{
    if (!std::isfinite(energy) || energy <= 0.0)
        throw domain_error("energy must be positive");
}

void check_wavepacket(const WavePacketConfig& wp)
{
    if (!std::isfinite(wp.sigma_x_m) || wp.sigma_x_m <= 0.0)
        throw domain_error("sigma_x_m must be positive");
    if (!std::isfinite(wp.rho) || wp.rho < 0.0)
        throw domain_error("rho must be non-negative");
}

struct KernelInputs {
    ComplexMatrix3 u;
    std::array<double, 3> energies; // eV
    double dv[3][3];                // pairwise velocity differences
};

// P(a -> b) = Re sum_ij U*_ai U_bi U_aj U*_bj
//             exp(-i L dE_ij - (L dv_ij / (2 sqrt2 sigma))^2 - rho^2 sigma^2 dE_ij^2 / 2)
// with everything in natural units. The diagonal i = j terms are undamped, so
// each row sums to one identically.
std::array<std::array<double, 3>, 3> kernel(const KernelInputs& in, double baseline_m,
                                            const WavePacketConfig& wp,
                                            const DegeneracyFloors& floors)
{
    const double l_nat = length_to_natural(baseline_m);
    const double sigma_nat = length_to_natural(wp.sigma_x_m);
    const bool damped = wp.mode == TreatmentMode::wave_packet;

    std::array<std::array<double, 3>, 3> rows;
    for (int a = 0; a < 3; ++a) {
        double sum = 0.0;
        for (int b = 0; b < 3; ++b) {
            std::complex<double> acc = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const std::complex<double> amp = std::conj(in.u(a, i)) * in.u(b, i)
                                                     * in.u(a, j) * std::conj(in.u(b, j));
                    const double de = in.energies[i] - in.energies[j];
                    double damp_exp = 0.0;
                    if (damped && i != j) {
                        const double dv = std::abs(in.dv[i][j]);
                        if (dv > floors.velocity_zero) {
                            const double sep = l_nat * dv / (2.0 * std::sqrt(2.0) * sigma_nat);
                            damp_exp -= sep * sep;
                        }
                        const double loc = wp.rho * sigma_nat * de;
                        damp_exp -= 0.5 * loc * loc;
                    }
                    acc += amp * std::exp(std::complex<double>(damp_exp, -de * l_nat));
                }
            if (std::abs(acc.imag()) > 1e-12)
                throw numerical_error("probability: imaginary residue above 1e-12");
            double val = acc.real();
            if (val < -1e-12 || val > 1.0 + 1e-12)
                throw numerical_error("probability: entry outside [-1e-12, 1+1e-12]");
            val = std::min(1.0, std::max(0.0, val));
            rows[a][b] = val;
            sum += val;
        }
        if (std::abs(sum - 1.0) > 1e-10)
            throw numerical_error("probability: row sum deviates from 1 beyond 1e-10");
    }
    return rows;
}

KernelInputs vacuum_inputs(const OscillationParams& p, double energy)
{
    KernelInputs in;
    in.u = build_pmns(p, ParticleKind::neutrino);
    in.energies = {0.0, p.dm21_sq / (2.0 * energy), p.dm31_sq / (2.0 * energy)};
    const double e2 = 2.0 * energy * energy;
    const double dv21 = -p.dm21_sq / e2;
    const double dv31 = -p.dm31_sq / e2;
    const double dv32 = -(p.dm31_sq - p.dm21_sq) / e2;
    const double pairs[3][3] = {{0.0, -dv21, -dv31}, {dv21, 0.0, -dv32}, {dv31, dv32, 0.0}};
    std::copy(&pairs[0][0], &pairs[0][0] + 9, &in.dv[0][0]);
    return in;
}

KernelInputs matter_inputs(const OscillationParams& p, const WavePacketConfig& wp,
                           double energy, double potential, ParticleKind kind,
                           const DegeneracyFloors& floors)
{
    KernelInputs in;
    const MatterEigenSystem sys = matter_eigensystem(p, energy, potential, kind);
    in.u = sys.mixing;
    in.energies = {sys.e1m, sys.e2m, sys.e3m};
    double dv21 = 0.0, dv31 = 0.0, dv32 = 0.0;
    if (wp.mode == TreatmentMode::wave_packet) {
        const VelocityDifferences dv = velocity_differences(p, energy, potential, kind, floors);
        dv21 = dv.dv21;
        dv31 = dv.dv31;
        dv32 = dv.dv32;
    }
    const double pairs[3][3] = {{0.0, -dv21, -dv31}, {dv21, 0.0, -dv32}, {dv31, dv32, 0.0}};
    std::copy(&pairs[0][0], &pairs[0][0] + 9, &in.dv[0][0]);
    return in;
}

std::array<std::array<double, 3>, 3> vacuum_rows(const OscillationParams& p,
                                                 const WavePacketConfig& wp,
                                                 double baseline_m, double energy)
{
    check_baseline(baseline_m);
    check_energy(energy);
    check_wavepacket(wp);
    return kernel(vacuum_inputs(p, energy), baseline_m, wp, DegeneracyFloors{});
}

std::array<std::array<double, 3>, 3> matter_rows(const OscillationParams& p,
                                                 const WavePacketConfig& wp,
                                                 double baseline_m, double energy,
                                                 double potential, ParticleKind kind,
                                                 const DegeneracyFloors& floors)
{
    check_baseline(baseline_m);
    check_energy(energy);
    check_wavepacket(wp);
    return kernel(matter_inputs(p, wp, energy, potential, kind, floors), baseline_m, wp,
                  floors);
}

} // namespace

double vacuum_probability(const OscillationParams& p, const WavePacketConfig& wp,
                          Flavor alpha, Flavor beta, double baseline_m, double energy)
{
    return vacuum_rows(p, wp, baseline_m, energy)[flavor_index(alpha)][flavor_index(beta)];
}

double matter_probability(const OscillationParams& p, const WavePacketConfig& wp,
                          Flavor alpha, Flavor beta, double baseline_m, double energy,
                          double potential, ParticleKind kind,
                          const DegeneracyFloors& floors)
{
    return matter_rows(p, wp, baseline_m, energy, potential, kind,
                       floors)[flavor_index(alpha)][flavor_index(beta)];
}

FlavorProbabilities probability_matrix(const OscillationParams& p,
                                       const WavePacketConfig& wp, double baseline_m,
                                       double energy, double potential, ParticleKind kind,
                                       const DegeneracyFloors& floors)
{
    FlavorProbabilities out;
    out.p = matter_rows(p, wp, baseline_m, energy, potential, kind, floors);
    out.baseline_m = baseline_m;
    out.energy_eV = energy;
    out.potential_eV = potential;
    out.kind = kind;
    out.mode = wp.mode;
    return out;
}

std::array<double, 3> probability_row(const OscillationParams& p,
                                      const WavePacketConfig& wp, Flavor alpha,
                                      double baseline_m, double energy, double potential,
                                      ParticleKind kind, const DegeneracyFloors& floors)
{
    if (potential == 0.0 && kind == ParticleKind::neutrino)
        return vacuum_rows(p, wp, baseline_m, energy)[flavor_index(alpha)];
    return matter_rows(p, wp, baseline_m, energy, potential, kind,
                       floors)[flavor_index(alpha)];
}

double averaged_probability(const OscillationParams& p, Flavor alpha, Flavor beta,
                            double energy, double potential, ParticleKind kind)
{
    return averaged_row(p, alpha, energy, potential, kind)[flavor_index(beta)];
}

std::array<double, 3> averaged_row(const OscillationParams& p, Flavor alpha,
                                   double energy, double potential, ParticleKind kind)
{
    check_energy(energy);
    const ComplexMatrix3 u = potential == 0.0 && kind == ParticleKind::neutrino
                                 ? build_pmns(p, kind)
                                 : matter_mixing(p, energy, potential, kind);
    const int a = flavor_index(alpha);
    std::array<double, 3> row{};
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i)
            row[b] += std::norm(u(a, i)) * std::norm(u(b, i));
    return row;
}

} // namespace nuosc

#include "nuosc/kinematics.hpp"

#include "nuosc/errors.hpp"
#include "nuosc/units.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace nuosc {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double bracket_lo = 1e-18; // eV, root-search window
constexpr double bracket_hi = 1e-11;
constexpr int bracket_points = 400;

double signed_potential(double potential, ParticleKind kind)
{
    return kind == ParticleKind::antineutrino ? -potential : potential;
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

// Bisect a bracketed sign change down to machine precision.
double bisect(const std::function<double(double)>& f, double lo, double hi)
{
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fmid = f(mid);
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Scan f over a log grid on [bracket_lo, bracket_hi] and bisect every cell
// whose endpoints change sign.
std::vector<double> bracketed_roots(const std::function<double(double)>& f)
{
    const double step = std::pow(bracket_hi / bracket_lo, 1.0 / bracket_points);
    std::vector<double> roots;
    double v_prev = bracket_lo;
    double f_prev = f(v_prev);
    for (int k = 1; k <= bracket_points; ++k) {
        const double v = k == bracket_points ? bracket_hi : bracket_lo * std::pow(step, k);
        const double fv = f(v);
        if (f_prev == 0.0)
            roots.push_back(v_prev);
        else if (fv != 0.0 && (f_prev < 0.0) != (fv < 0.0))
            roots.push_back(bisect(f, v_prev, v));
        v_prev = v;
        f_prev = fv;
    }
    if (f_prev == 0.0)
        roots.push_back(v_prev);
    return roots;
}

} // namespace

LDerivatives dl_dE(const OscillationParams& p, double energy, double potential,
                   ParticleKind kind)
{
    check_energy(energy);
    const double vs = signed_potential(potential, kind);
    const double eps = epsilon(p);
    const double c2t13 = std::cos(2.0 * p.theta13);
    const double s2t13 = std::sin(2.0 * p.theta13);
    const double a = 2.0 * energy * vs;
    const double root = std::hypot(a - eps * c2t13, eps * s2t13);
    const double ratio = (a - eps * c2t13) / root;
    return LDerivatives{vs * (1.0 - ratio), vs * (1.0 + ratio)};
}

VelocityDifferences velocity_differences(const OscillationParams& p, double energy,
                                         double potential, ParticleKind kind,
                                         const DegeneracyFloors& floors)
{
    check_energy(energy);
    const MatterEigenSystem sys = matter_eigensystem(p, energy, potential, kind);
    const LDerivatives dl = dl_dE(p, energy, potential, kind);

    const double vs = signed_potential(potential, kind);
    const double eps = sys.epsilon;
    const double s2t13 = std::sin(2.0 * p.theta13);
    const double d = eps * std::cos(2.0 * p.theta13) - 2.0 * energy * vs;
    const double n = eps * s2t13;

    // The 12-sector splitting sqrt(R) = 4E*e2m - (l1 + l2), computed from its
    // stable square-root form rather than the cancellation-prone difference.
    const double coupling = p.dm21_sq * std::sin(2.0 * p.theta12)
                            * std::cos(p.theta13 - sys.theta13m);
    const double split = std::hypot(sys.l1 - sys.l2, coupling);
    if (split < floors.twelve_splitting)
        throw degenerate_error(
            "velocity_differences: 12-sector splitting 4E*e2m - (l1+l2) below floor");
    if (std::abs(d) < floors.thirteen_resonance)
        throw degenerate_error(
            "velocity_differences: 13-resonance denominator eps*cos(2*theta13) - 2EV "
            "below floor");

    // zeta / d^2 evaluated with cos^2(2*theta13m) / d^2 = 1 / (n^2 + d^2),
    // which is exact for the branch-corrected angle and finite through the
    // 13 resonance.
    const double zeta_over_d2 = 4.0 * p.dm21_sq * p.dm21_sq * eps * vs
                                * std::pow(std::sin(2.0 * p.theta12), 2) * s2t13
                                * std::sin(2.0 * (p.theta13 - sys.theta13m))
                                / (n * n + d * d);

    const double xi = (8.0 * (sys.l1 - sys.l2) * dl.dl1_dE + zeta_over_d2) / (2.0 * split);

    VelocityDifferences dv;
    dv.dv21 = (-8.0 * (sys.e2m - sys.e1m) + xi) / (8.0 * energy);
    dv.dv32 = (6.0 * dl.dl3_dE - 4.0 * vs - 8.0 * (sys.e3m - sys.e2m) - 0.5 * xi)
              / (8.0 * energy);
    dv.dv31 = dv.dv32 + dv.dv21;
    return dv;
}

std::array<PairLengths, 3> vacuum_lengths(const OscillationParams& p, double energy,
                                          const WavePacketConfig& wp)
{
    check_energy(energy);
    check_wavepacket(wp);
    const double hbar_c = physical_scales.hbar_c_eV_m;
    const double dm[3] = {p.dm21_sq, p.dm31_sq, p.dm31_sq - p.dm21_sq};
    const int label[3] = {21, 31, 32};
    std::array<PairLengths, 3> out;
    for (int k = 0; k < 3; ++k) {
        const double m2 = std::abs(dm[k]);
        out[k].pair = label[k];
        if (m2 == 0.0) {
            out[k].l_osc_m = std::numeric_limits<double>::infinity();
            out[k].l_coh_m = std::numeric_limits<double>::infinity();
            continue;
        }
        out[k].l_osc_m = 4.0 * pi * energy / m2 * hbar_c;
        out[k].l_coh_m = 4.0 * std::sqrt(2.0) * wp.sigma_x_m * energy * energy / m2;
    }
    return out;
}

std::array<PairLengths, 3> matter_lengths(const OscillationParams& p, double energy,
                                          double potential, ParticleKind kind,
                                          const WavePacketConfig& wp,
                                          const DegeneracyFloors& floors)
{
    check_energy(energy);
    check_wavepacket(wp);
    const MatterEigenvalues e = matter_eigenvalues(p, energy, potential, kind);
    const VelocityDifferences dv = velocity_differences(p, energy, potential, kind, floors);
    const double hbar_c = physical_scales.hbar_c_eV_m;
    const double de[3] = {e.e2m - e.e1m, e.e3m - e.e1m, e.e3m - e.e2m};
    const double dvp[3] = {dv.dv21, dv.dv31, dv.dv32};
    const int label[3] = {21, 31, 32};
    std::array<PairLengths, 3> out;
    for (int k = 0; k < 3; ++k) {
        out[k].pair = label[k];
        out[k].l_osc_m = de[k] == 0.0 ? std::numeric_limits<double>::infinity()
                                      : 2.0 * pi / std::abs(de[k]) * hbar_c;
        out[k].l_coh_m = std::abs(dvp[k]) <= floors.velocity_zero
                             ? std::numeric_limits<double>::infinity()
                             : 2.0 * std::sqrt(2.0) * wp.sigma_x_m / std::abs(dvp[k]);
    }
    return out;
}

ResonancePotentials find_resonance_potentials(const OscillationParams& p, double energy,
                                              ParticleKind kind)
{
    check_energy(energy);
    const auto theta12_target = [&](double v) {
        return theta12_matter(p, energy, v, kind) - pi / 4.0;
    };
    const auto theta13_target = [&](double v) {
        return theta13_matter(p, energy, v, kind) - pi / 4.0;
    };
    const std::vector<double> r1 = bracketed_roots(theta12_target);
    if (r1.empty())
        throw not_found_error(
            "find_resonance_potentials: theta12_matter never crosses pi/4 in bracket");
    const std::vector<double> r2 = bracketed_roots(theta13_target);
    if (r2.empty())
        throw not_found_error(
            "find_resonance_potentials: theta13_matter never crosses pi/4 in bracket");
    return ResonancePotentials{r1.front(), r2.front()};
}

std::vector<CoherenceRoot> find_infinite_coherence_potentials(
    const OscillationParams& p, double energy, ParticleKind kind,
    const DegeneracyFloors& floors)
{
    check_energy(energy);
    std::vector<CoherenceRoot> roots;
    const int label[3] = {21, 32, 31};
    for (int k = 0; k < 3; ++k) {
        const auto target = [&](double v) {
            const VelocityDifferences dv = velocity_differences(p, energy, v, kind, floors);
            return k == 0 ? dv.dv21 : k == 1 ? dv.dv32 : dv.dv31;
        };
        for (double v : bracketed_roots(target))
            roots.push_back(CoherenceRoot{label[k], v});
    }
    std::sort(roots.begin(), roots.end(),
              [](const CoherenceRoot& a, const CoherenceRoot& b) {
                  return a.potential < b.potential;
              });
    return roots;
}

} // namespace nuosc

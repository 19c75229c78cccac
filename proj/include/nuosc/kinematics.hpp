#pragma once

#include "nuosc/matter.hpp"
#include "nuosc/params.hpp"
#include "nuosc/wavepacket.hpp"

#include <vector>

namespace nuosc {

/// Floors for guarded denominators and the velocity-zero sentinel. The
/// denominators are in eV^2, the velocity floor is dimensionless. Raising a
/// floor turns the corresponding configuration into a degenerate_error, which
/// keeps the error paths testable.
struct DegeneracyFloors {
    double twelve_splitting = 1e-30;      // 12-sector splitting sqrt(R)
    double thirteen_resonance = 1e-30;    // eps*cos(2*theta13) - 2*E*V
    double velocity_zero = 1e-35;         // |dv| below this means infinite l_coh
};

/// Energy derivatives of the outer auxiliary eigenvalues (dimensionless,
/// i.e. eV^2 per eV per eV... the l's are quadratic in eV so dl/dE is eV).
struct LDerivatives {
    double dl1_dE, dl3_dE; // eV
};

/// Pairwise group-velocity differences (dimensionless, units of c).
struct VelocityDifferences {
    double dv21, dv32, dv31;
};

/// Oscillation and coherence lengths of one eigenstate pair, in meters.
/// l_coh_m is +infinity where the pair's velocity difference vanishes.
struct PairLengths {
    int pair; // 21, 31 or 32
    double l_osc_m;
    double l_coh_m;
};

struct ResonancePotentials {
    double v_res1; // 12-sector resonance (theta12m = pi/4), eV
    double v_res2; // 13-sector resonance (theta13m = pi/4), eV
};

/// One potential at which a pairwise velocity difference vanishes, so that
/// pair's coherence length diverges.
struct CoherenceRoot {
    int pair;         // 21, 31 or 32
    double potential; // eV
};

/// Analytic dl1/dE and dl3/dE; their sum is twice the signed potential.
LDerivatives dl_dE(const OscillationParams& p, double energy, double potential,
                   ParticleKind kind);

/// Closed-form pairwise group-velocity differences in matter. These are the
/// exact energy derivatives of the eigenvalue splittings.
VelocityDifferences velocity_differences(const OscillationParams& p, double energy,
                                         double potential, ParticleKind kind,
                                         const DegeneracyFloors& floors = {});

/// Vacuum oscillation and coherence lengths per pair:
/// l_osc = 4*pi*E/|dm^2| * hbar_c, l_coh = 4*sqrt(2)*sigma_x*E^2/|dm^2|.
std::array<PairLengths, 3> vacuum_lengths(const OscillationParams& p, double energy,
                                          const WavePacketConfig& wp);

/// Matter oscillation and coherence lengths per pair:
/// l_osc = 2*pi/|dE^m| * hbar_c, l_coh = 2*sqrt(2)*sigma_x/|dv|.
std::array<PairLengths, 3> matter_lengths(const OscillationParams& p, double energy,
                                          double potential, ParticleKind kind,
                                          const WavePacketConfig& wp,
                                          const DegeneracyFloors& floors = {});

/// Potentials where the effective mixing angles pass through pi/4, found by a
/// bracketed bisection over V in [1e-18, 1e-11] eV and polished to machine
/// precision. Throws not_found_error if an angle never crosses pi/4 there
/// (antineutrinos, for normal ordering).
ResonancePotentials find_resonance_potentials(const OscillationParams& p, double energy,
                                              ParticleKind kind);

/// All potentials in [1e-18, 1e-11] eV where some pairwise velocity
/// difference vanishes, sorted by potential.
std::vector<CoherenceRoot> find_infinite_coherence_potentials(
    const OscillationParams& p, double energy, ParticleKind kind,
    const DegeneracyFloors& floors = {});

} // namespace nuosc

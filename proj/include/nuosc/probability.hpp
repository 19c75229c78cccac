#pragma once

#include "nuosc/kinematics.hpp"
#include "nuosc/params.hpp"
#include "nuosc/wavepacket.hpp"

#include <array>

namespace nuosc {

/// Full 3x3 transition-probability matrix at one configuration; row alpha,
/// column beta is P(alpha -> beta).
struct FlavorProbabilities {
    std::array<std::array<double, 3>, 3> p{};
    double baseline_m;
    double energy_eV;
    double potential_eV;
    ParticleKind kind;
    TreatmentMode mode;

    double operator()(Flavor a, Flavor b) const
    {
        return p[flavor_index(a)][flavor_index(b)];
    }
};

/// Oscillation probability in vacuum for neutrinos. In wave-packet mode the
/// pairwise interference terms carry separation damping and localization
/// suppression; in plane-wave mode only the phases remain.
double vacuum_probability(const OscillationParams& p, const WavePacketConfig& wp,
                          Flavor alpha, Flavor beta, double baseline_m, double energy);

/// Oscillation probability in uniform matter, built from the closed-form
/// eigensystem and velocity differences.
double matter_probability(const OscillationParams& p, const WavePacketConfig& wp,
                          Flavor alpha, Flavor beta, double baseline_m, double energy,
                          double potential, ParticleKind kind,
                          const DegeneracyFloors& floors = {});

/// All nine matter probabilities at once. V = 0 is allowed and reproduces the
/// vacuum values.
FlavorProbabilities probability_matrix(const OscillationParams& p,
                                       const WavePacketConfig& wp, double baseline_m,
                                       double energy, double potential, ParticleKind kind,
                                       const DegeneracyFloors& floors = {});

/// One row of probabilities for initial flavor alpha. Exactly V = 0 with
/// neutrino kind dispatches to the vacuum expressions so sweep output matches
/// direct vacuum calls bit for bit.
std::array<double, 3> probability_row(const OscillationParams& p,
                                      const WavePacketConfig& wp, Flavor alpha,
                                      double baseline_m, double energy, double potential,
                                      ParticleKind kind,
                                      const DegeneracyFloors& floors = {});

/// Fully decohered (infinite-baseline) probability sum_i |U_ai|^2 |U_bi|^2
/// with the matter mixing matrix.
double averaged_probability(const OscillationParams& p, Flavor alpha, Flavor beta,
                            double energy, double potential, ParticleKind kind);

/// Row of averaged probabilities for initial flavor alpha.
std::array<double, 3> averaged_row(const OscillationParams& p, Flavor alpha,
                                   double energy, double potential, ParticleKind kind);

} // namespace nuosc

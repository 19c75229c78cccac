#pragma once

#include "nuosc/params.hpp"

namespace nuosc {

/// Effective two-level splitting epsilon = dm31_sq - dm21_sq * sin^2(theta12)
/// that controls the 13 sector in matter.
double epsilon(const OscillationParams& p);

/// Auxiliary eigenvalues (eV^2) of the rotated Hamiltonian before the final
/// 12-plane diagonalization. l2 is potential-independent.
struct LEigenvalues {
    double l1, l2, l3;
};

/// Matter eigenvalues (eV), i.e. the closed-form energy shifts e_i^m.
struct MatterEigenvalues {
    double e1m, e2m, e3m;
};

/// Everything the closed-form matter diagonalization produces at one
/// (E, V, kind) point.
struct MatterEigenSystem {
    double energy;    // eV
    double potential; // eV, as passed by the caller (unsigned for antineutrinos)
    ParticleKind kind;
    double theta13m; // radians, in [0, pi)
    double theta12m; // radians, in [0, pi)
    double l1, l2, l3;    // eV^2
    double e1m, e2m, e3m; // eV
    ComplexMatrix3 mixing;
    double epsilon; // eV^2
};

/// Effective 13 mixing angle in matter, branch-corrected to [0, pi) so it
/// passes through pi/4 at resonance and approaches pi/2 at large V.
/// Antineutrinos see the potential with opposite sign; negative V values are
/// accepted and mean the opposite kind. Throws domain_error for E <= 0.
double theta13_matter(const OscillationParams& p, double energy, double potential,
                      ParticleKind kind);

/// Auxiliary eigenvalues l1, l2, l3 (eV^2).
LEigenvalues l_eigenvalues(const OscillationParams& p, double energy, double potential,
                           ParticleKind kind);

/// Effective 12 mixing angle in matter, branch-corrected to [0, pi).
double theta12_matter(const OscillationParams& p, double energy, double potential,
                      ParticleKind kind);

/// Closed-form matter eigenvalues (eV).
MatterEigenvalues matter_eigenvalues(const OscillationParams& p, double energy,
                                     double potential, ParticleKind kind);

/// Mixing matrix in matter: the vacuum parameterization evaluated with the
/// effective angles (theta12m, theta13m) and the vacuum theta23 and delta_cp.
ComplexMatrix3 matter_mixing(const OscillationParams& p, double energy, double potential,
                             ParticleKind kind);

/// Bundle of all closed-form quantities above.
MatterEigenSystem matter_eigensystem(const OscillationParams& p, double energy,
                                     double potential, ParticleKind kind);

/// Flavor-basis Hamiltonian (eV): (U diag(0, dm21_sq, dm31_sq) U^dagger)/2E
/// plus the charged-current potential in the (e, e) entry.
ComplexMatrix3 flavor_hamiltonian(const OscillationParams& p, double energy,
                                  double potential, ParticleKind kind);

/// Eigenvalues in ascending order with matching orthonormal eigenvector
/// columns.
struct EigenSystem {
    std::array<double, 3> values;
    ComplexMatrix3 vectors; // column k belongs to values[k]
};

/// Direct numerical eigendecomposition of a 3x3 Hermitian matrix via the
/// trigonometric cubic solution, one Newton polish per root, and cross-product
/// eigenvectors. The imaginary parts of the diagonal are ignored.
EigenSystem hermitian_eigensystem(const ComplexMatrix3& m);

/// Eigendecomposition of flavor_hamiltonian, independent of every closed form
/// above.
EigenSystem exact_eigensystem(const OscillationParams& p, double energy,
                              double potential, ParticleKind kind);

/// Spectral norm (largest absolute eigenvalue) of a Hermitian matrix.
double spectral_norm(const ComplexMatrix3& m);

} // namespace nuosc

#pragma once

#include <array>
#include <complex>

namespace nuosc {

enum class ParticleKind { neutrino, antineutrino };

enum class Flavor { e = 0, mu = 1, tau = 2 };

/// Mixing angles (radians), CP phase (radians) and mass-squared splittings
/// (eV^2) of the three-flavor system.
struct OscillationParams {
    double theta12;
    double theta13;
    double theta23;
    double delta_cp;
    double dm21_sq; // m2^2 - m1^2, > 0
    double dm31_sq; // m3^2 - m1^2, nonzero; > 0 selects normal ordering
};

/// Dense 3x3 complex matrix with value semantics.
struct ComplexMatrix3 {
    std::array<std::complex<double>, 9> a{};

    std::complex<double>& operator()(int r, int c) { return a[3 * r + c]; }
    const std::complex<double>& operator()(int r, int c) const { return a[3 * r + c]; }

    static ComplexMatrix3 identity();
};

ComplexMatrix3 operator*(const ComplexMatrix3& x, const ComplexMatrix3& y);

/// Conjugate transpose.
ComplexMatrix3 adjoint(const ComplexMatrix3& m);

/// Entrywise complex conjugate.
ComplexMatrix3 conjugate(const ComplexMatrix3& m);

/// Largest entrywise absolute difference.
double max_abs_diff(const ComplexMatrix3& x, const ComplexMatrix3& y);

/// Largest entrywise deviation from the identity of U U^dagger.
double unitarity_defect(const ComplexMatrix3& u);

/// Global best-fit parameters (normal ordering) used as defaults everywhere:
/// theta12 = 33.82 deg, theta13 = 8.61 deg, theta23 = 49.7 deg,
/// delta = 217 deg, dm21^2 = 7.39e-5 eV^2, dm31^2 = 2.451e-3 eV^2.
OscillationParams default_params();

/// Throws domain_error unless angles lie in [0, pi/2), delta_cp in [0, 2*pi),
/// dm21_sq > 0 and dm31_sq != 0, all finite.
void validate(const OscillationParams& p);

/// Real rotation by angle in the (i, j) plane, 1-based axes from {12, 13, 23}
/// passed as i and j. Throws domain_error for any other axis pair.
ComplexMatrix3 build_rotation(int i, int j, double angle);

/// Full mixing matrix in the standard parameterization. The antineutrino
/// matrix is the entrywise complex conjugate (delta -> -delta).
ComplexMatrix3 build_pmns(const OscillationParams& p, ParticleKind kind);

inline int flavor_index(Flavor f) { return static_cast<int>(f); }

} // namespace nuosc

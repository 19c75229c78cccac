#include "nuosc/matter.hpp"

#include "nuosc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace nuosc {

namespace {

constexpr double pi = std::numbers::pi;

// Antineutrinos see the charged-current potential with opposite sign; all
// closed forms below take the signed value.
double signed_potential(double potential, ParticleKind kind)
{
    return kind == ParticleKind::antineutrino ? -potential : potential;
}

void check_energy(double energy)
{
    if (!std::isfinite(energy) || energy <= 0.0)
        throw domain_error("energy must be positive");
}

void check_potential(double potential)
{
    if (!std::isfinite(potential))
        throw domain_error("potential must be finite");
}

// Half of atan2(y, x) with the double angle mapped to [0, pi) first, which
// keeps the angle continuous through the resonance instead of jumping branch.
double half_angle(double y, double x)
{
    double a = std::atan2(y, x);
    if (a < 0.0)
        a += pi;
    return 0.5 * a;
}

struct Closed13 {
    double eps;
    double theta13m;
    double l1, l2, l3;
    bool vacuum; // vs == 0, where every closed form collapses exactly
};

Closed13 closed13(const OscillationParams& p, double energy, double vs)
{
    const double eps = epsilon(p);
    const double s12 = std::sin(p.theta12);
    const double c12 = std::cos(p.theta12);

    Closed13 r;
    r.eps = eps;
    r.l2 = p.dm21_sq * c12 * c12;
    r.vacuum = vs == 0.0;

    // At V = 0 the closed forms reduce algebraically to the vacuum values;
    // evaluating that branch directly keeps the reduction exact instead of
    // rounded, so probabilities at V = 0 match the vacuum path bit for bit
    // even after the baseline multiplies tiny eigenvalue noise by 1e24.
    if (r.vacuum) {
        r.theta13m = p.theta13;
        r.l1 = p.dm21_sq * s12 * s12;
        r.l3 = p.dm31_sq;
        return r;
    }

    const double c2t13 = std::cos(2.0 * p.theta13);
    const double s2t13 = std::sin(2.0 * p.theta13);
    const double a = 2.0 * energy * vs;
    r.theta13m = half_angle(eps * s2t13, eps * c2t13 - a);

    // The radicand (a^2 + eps^2 - 2*a*eps*cos2t13) regrouped as a sum of
    // squares, so it cannot round negative near the resonance.
    const double root = std::hypot(a - eps * c2t13, eps * s2t13);
    const double sum = p.dm31_sq + a + p.dm21_sq * s12 * s12;
    r.l1 = 0.5 * (sum - root);
    r.l3 = 0.5 * (sum + root);
    return r;
}

struct Closed12 {
    double theta12m;
    double sum12;  // l1 + l2
    double split;  // sqrt((l1-l2)^2 + coupling^2), the 12 splitting in eV^2
};

Closed12 closed12(const OscillationParams& p, const Closed13& c13)
{
    const double coupling = p.dm21_sq * std::sin(2.0 * p.theta12)
                            * std::cos(p.theta13 - c13.theta13m);
    Closed12 r;
    r.theta12m = c13.vacuum ? p.theta12 : half_angle(coupling, c13.l2 - c13.l1);
    r.sum12 = c13.l1 + c13.l2;
    r.split = std::hypot(c13.l1 - c13.l2, coupling);
    return r;
}

std::array<std::complex<double>, 3> cross(const std::array<std::complex<double>, 3>& a,
                                          const std::array<std::complex<double>, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

double norm_sq(const std::array<std::complex<double>, 3>& v)
{
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

// Any nonzero cross product of two rows of a rank-2 matrix spans its null
// space (the plain bilinear dot of each row with the cross vanishes).
std::array<std::complex<double>, 3> null_vector(const ComplexMatrix3& m)
{
    std::array<std::array<std::complex<double>, 3>, 3> rows;
    for (int i = 0; i < 3; ++i)
        rows[i] = {m(i, 0), m(i, 1), m(i, 2)};

    std::array<std::complex<double>, 3> best{};
    double best_sq = 0.0;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        auto c = cross(rows[i], rows[j]);
        const double sq = norm_sq(c);
        if (sq > best_sq) {
            best_sq = sq;
            best = c;
        }
    }

    double row_scale = 0.0;
    for (auto& r : rows)
        row_scale = std::max(row_scale, norm_sq(r));
    if (best_sq > 1e-24 * row_scale * row_scale)
        return best;

    // Degenerate eigenvalue: the rows span at most one direction, and any
    // vector annihilated by the largest row works.
    int imax = 0;
    for (int i = 1; i < 3; ++i)
        if (norm_sq(rows[i]) > norm_sq(rows[imax]))
            imax = i;
    if (norm_sq(rows[imax]) == 0.0)
        return {1.0, 0.0, 0.0};
    int kmin = 0;
    for (int k = 1; k < 3; ++k)
        if (std::norm(rows[imax][k]) < std::norm(rows[imax][kmin]))
            kmin = k;
    std::array<std::complex<double>, 3> ek{};
    ek[kmin] = 1.0;
    return cross(rows[imax], ek);
}

void normalize(std::array<std::complex<double>, 3>& v)
{
    const double n = std::sqrt(norm_sq(v));
    if (n > 0.0)
        for (auto& x : v)
            x /= n;
}

std::complex<double> hdot(const std::array<std::complex<double>, 3>& a,
                          const std::array<std::complex<double>, 3>& b)
{
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

// Make b a unit vector orthogonal to the unit vector a. When the two span the
// same direction (degenerate spectra hand null_vector the same null space
// twice), replace b with the orthonormal completion of a built from the least
// aligned coordinate axis.
void orthogonalize_against(const std::array<std::complex<double>, 3>& a,
                           std::array<std::complex<double>, 3>& b)
{
    const std::complex<double> overlap = hdot(a, b);
    for (int i = 0; i < 3; ++i)
        b[i] -= overlap * a[i];
    if (norm_sq(b) <= 1e-12) {
        int kmin = 0;
        for (int k = 1; k < 3; ++k)
            if (std::norm(a[k]) < std::norm(a[kmin]))
                kmin = k;
        b = {0.0, 0.0, 0.0};
        b[kmin] = 1.0;
        const std::complex<double> axis_overlap = hdot(a, b);
        for (int i = 0; i < 3; ++i)
            b[i] -= axis_overlap * a[i];
    }
    normalize(b);
}

double det_real(const ComplexMatrix3& m)
{
    const std::complex<double> d =
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return d.real();
}

} // namespace

double epsilon(const OscillationParams& p)
{
    const double s12 = std::sin(p.theta12);
    return p.dm31_sq - p.dm21_sq * s12 * s12;
}

double theta13_matter(const OscillationParams& p, double energy, double potential,
                      ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    return closed13(p, energy, signed_potential(potential, kind)).theta13m;
}

LEigenvalues l_eigenvalues(const OscillationParams& p, double energy, double potential,
                           ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const Closed13 c = closed13(p, energy, signed_potential(potential, kind));
    return LEigenvalues{c.l1, c.l2, c.l3};
}

double theta12_matter(const OscillationParams& p, double energy, double potential,
                      ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const Closed13 c13 = closed13(p, energy, signed_potential(potential, kind));
    return closed12(p, c13).theta12m;
}

namespace {

MatterEigenvalues eigenvalues_from(const OscillationParams& p, const Closed13& c13,
                                   const Closed12& c12, double energy)
{
    MatterEigenvalues e;
    if (c13.vacuum) {
        e.e1m = 0.0;
        e.e2m = p.dm21_sq / (2.0 * energy);
        e.e3m = p.dm31_sq / (2.0 * energy);
        return e;
    }
    e.e1m = (c12.sum12 - c12.split) / (4.0 * energy);
    e.e2m = (c12.sum12 + c12.split) / (4.0 * energy);
    e.e3m = c13.l3 / (2.0 * energy);
    return e;
}

} // namespace

MatterEigenvalues matter_eigenvalues(const OscillationParams& p, double energy,
                                     double potential, ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const Closed13 c13 = closed13(p, energy, signed_potential(potential, kind));
    const Closed12 c12 = closed12(p, c13);
    return eigenvalues_from(p, c13, c12, energy);
}

ComplexMatrix3 matter_mixing(const OscillationParams& p, double energy, double potential,
                             ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const Closed13 c13 = closed13(p, energy, signed_potential(potential, kind));
    const Closed12 c12 = closed12(p, c13);
    OscillationParams effective = p;
    effective.theta13 = c13.theta13m;
    effective.theta12 = c12.theta12m;
    return build_pmns(effective, kind);
}

MatterEigenSystem matter_eigensystem(const OscillationParams& p, double energy,
                                     double potential, ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const Closed13 c13 = closed13(p, energy, signed_potential(potential, kind));
    const Closed12 c12 = closed12(p, c13);

    MatterEigenSystem s;
    s.energy = energy;
    s.potential = potential;
    s.kind = kind;
    s.theta13m = c13.theta13m;
    s.theta12m = c12.theta12m;
    s.l1 = c13.l1;
    s.l2 = c13.l2;
    s.l3 = c13.l3;
    const MatterEigenvalues e = eigenvalues_from(p, c13, c12, energy);
    s.e1m = e.e1m;
    s.e2m = e.e2m;
    s.e3m = e.e3m;
    s.epsilon = c13.eps;

    OscillationParams effective = p;
    effective.theta13 = c13.theta13m;
    effective.theta12 = c12.theta12m;
    s.mixing = build_pmns(effective, kind);
    return s;
}

ComplexMatrix3 flavor_hamiltonian(const OscillationParams& p, double energy,
                                  double potential, ParticleKind kind)
{
    check_energy(energy);
    check_potential(potential);
    const double vs = signed_potential(potential, kind);
    const ComplexMatrix3 u = build_pmns(p, kind);
    const double d[3] = {0.0, p.dm21_sq / (2.0 * energy), p.dm31_sq / (2.0 * energy)};
    ComplexMatrix3 h;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += u(a, k) * d[k] * std::conj(u(b, k));
            h(a, b) = s;
        }
    h(0, 0) += vs;
    return h;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix3& m)
{
    // Work on the symmetrized, scaled copy so the cubic stays conditioned for
    // entries anywhere between 1e-30 and 1e+30.
    ComplexMatrix3 h;
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
            scale = std::max(scale, std::abs(h(i, j)));
        }

    EigenSystem out;
    out.vectors = ComplexMatrix3::identity();
    if (scale == 0.0) {
        out.values = {0.0, 0.0, 0.0};
        return out;
    }
    for (auto& x : h.a)
        x /= scale;

    const double trace_third =
        (h(0, 0).real() + h(1, 1).real() + h(2, 2).real()) / 3.0;
    ComplexMatrix3 b = h;
    for (int i = 0; i < 3; ++i)
        b(i, i) -= trace_third;

    const double off_sq = std::norm(b(0, 1)) + std::norm(b(0, 2)) + std::norm(b(1, 2));
    const double diag_sq = b(0, 0).real() * b(0, 0).real()
                           + b(1, 1).real() * b(1, 1).real()
                           + b(2, 2).real() * b(2, 2).real();
    const double p2 = diag_sq + 2.0 * off_sq;

    std::array<double, 3> mu;
    if (p2 <= 0.0) {
        mu = {0.0, 0.0, 0.0};
    } else {
        const double pp = std::sqrt(p2 / 6.0);
        const double q = det_real(b);
        const double r = std::clamp(q / (2.0 * pp * pp * pp), -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        const double m1 = 2.0 * pp * std::cos(phi);
        const double m3 = 2.0 * pp * std::cos(phi + 2.0 * pi / 3.0);
        mu = {m3, -m1 - m3, m1};

        // One Newton step per root on the trace-free characteristic
        // polynomial -x^3 + (p2/2) x + q tightens the trigonometric roots.
        const double c1 = 0.5 * p2;
        for (auto& x : mu) {
            const double deriv = -3.0 * x * x + c1;
            if (std::abs(deriv) > 1e-3 * pp * pp)
                x -= (-x * x * x + c1 * x + q) / deriv;
        }
        std::sort(mu.begin(), mu.end());
    }

    std::array<std::array<std::complex<double>, 3>, 3> vec;
    for (int k : {0, 2}) {
        ComplexMatrix3 shifted = b;
        for (int i = 0; i < 3; ++i)
            shifted(i, i) -= mu[k];
        vec[k] = null_vector(shifted);
        normalize(vec[k]);
    }
    orthogonalize_against(vec[0], vec[2]);
    // Hermitian-orthogonal complement of the outer two eigenvectors: the
    // conjugated cross product satisfies <v0, w> = <v2, w> = 0, and for an
    // orthonormal pair it is itself a unit vector.
    vec[1] = cross({std::conj(vec[0][0]), std::conj(vec[0][1]), std::conj(vec[0][2])},
                   {std::conj(vec[2][0]), std::conj(vec[2][1]), std::conj(vec[2][2])});
    normalize(vec[1]);

    for (int k = 0; k < 3; ++k) {
        out.values[k] = scale * (trace_third + mu[k]);
        for (int i = 0; i < 3; ++i)
            out.vectors(i, k) = vec[k][i];
    }
    return out;
}

EigenSystem exact_eigensystem(const OscillationParams& p, double energy,
                              double potential, ParticleKind kind)
{
    return hermitian_eigensystem(flavor_hamiltonian(p, energy, potential, kind));
}

double spectral_norm(const ComplexMatrix3& m)
{
    const EigenSystem s = hermitian_eigensystem(m);
    return std::max(std::abs(s.values[0]), std::abs(s.values[2]));
}

} // namespace nuosc

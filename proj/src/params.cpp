#include "nuosc/params.hpp"

#include "nuosc/errors.hpp"

#include <cmath>
#include <numbers>

namespace nuosc {

ComplexMatrix3 ComplexMatrix3::identity()
{
    ComplexMatrix3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

ComplexMatrix3 operator*(const ComplexMatrix3& x, const ComplexMatrix3& y)
{
    ComplexMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix3 adjoint(const ComplexMatrix3& m)
{
    ComplexMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = std::conj(m(j, i));
    return r;
}

ComplexMatrix3 conjugate(const ComplexMatrix3& m)
{
    ComplexMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = std::conj(m(i, j));
    return r;
}

double max_abs_diff(const ComplexMatrix3& x, const ComplexMatrix3& y)
{
    double worst = 0.0;
    for (int i = 0; i < 9; ++i)
        worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

double unitarity_defect(const ComplexMatrix3& u)
{
    return max_abs_diff(u * adjoint(u), ComplexMatrix3::identity());
}

OscillationParams default_params()
{
    constexpr double deg = std::numbers::pi / 180.0;
    return OscillationParams{33.82 * deg, 8.61 * deg, 49.7 * deg,
                             217.0 * deg, 7.39e-5,    2.451e-3};
}

void validate(const OscillationParams& p)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    auto angle_ok = [](double a) { return std::isfinite(a) && a >= 0.0 && a < half_pi; };
    if (!angle_ok(p.theta12))
        throw domain_error("theta12 must lie in [0, pi/2)");
    if (!angle_ok(p.theta13))
        throw domain_error("theta13 must lie in [0, pi/2)");
    if (!angle_ok(p.theta23))
        throw domain_error("theta23 must lie in [0, pi/2)");
    if (!std::isfinite(p.delta_cp) || p.delta_cp < 0.0 || p.delta_cp >= two_pi)
        throw domain_error("delta_cp must lie in [0, 2*pi)");
    if (!std::isfinite(p.dm21_sq) || p.dm21_sq <= 0.0)
        throw domain_error("dm21_sq must be positive");
    if (!std::isfinite(p.dm31_sq) || p.dm31_sq == 0.0)
        throw domain_error("dm31_sq must be nonzero");
}

ComplexMatrix3 build_rotation(int i, int j, double angle)
{
    if (!std::isfinite(angle))
        throw domain_error("build_rotation: angle must be finite");
    const int plane = 10 * i + j;
    if (plane != 12 && plane != 13 && plane != 23)
        throw domain_error("build_rotation: axis pair must be 12, 13 or 23");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    ComplexMatrix3 r = ComplexMatrix3::identity();
    r(i - 1, i - 1) = c;
    r(j - 1, j - 1) = c;
    r(i - 1, j - 1) = s;
    r(j - 1, i - 1) = -s;
    return r;
}

ComplexMatrix3 build_pmns(const OscillationParams& p, ParticleKind kind)
{
    const double s12 = std::sin(p.theta12), c12 = std::cos(p.theta12);
    const double s13 = std::sin(p.theta13), c13 = std::cos(p.theta13);
    const double s23 = std::sin(p.theta23), c23 = std::cos(p.theta23);
    const double d = kind == ParticleKind::antineutrino ? -p.delta_cp : p.delta_cp;
    const std::complex<double> eid = std::polar(1.0, d);
    const std::complex<double> emid = std::conj(eid);

    ComplexMatrix3 u;
    u(0, 0) = c12 * c13;
    u(0, 1) = s12 * c13;
    u(0, 2) = s13 * emid;
    u(1, 0) = -s12 * c23 - c12 * s23 * s13 * eid;
    u(1, 1) = c12 * c23 - s12 * s23 * s13 * eid;
    u(1, 2) = s23 * c13;
    u(2, 0) = s12 * s23 - c12 * c23 * s13 * eid;
    u(2, 1) = -c12 * s23 - s12 * c23 * s13 * eid;
    u(2, 2) = c23 * c13;
    return u;
}

} // namespace nuosc

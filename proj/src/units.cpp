#include "nuosc/units.hpp"

#include "nuosc/errors.hpp"

#include <cmath>

namespace nuosc {

double length_to_natural(double length_m)
{
    if (!std::isfinite(length_m) || length_m < 0.0)
        throw domain_error("length_to_natural: length must be finite and non-negative");
    return length_m / physical_scales.hbar_c_eV_m;
}

double natural_to_length(double length_nat)
{
    if (!std::isfinite(length_nat) || length_nat < 0.0)
        throw domain_error("natural_to_length: length must be finite and non-negative");
    return length_nat * physical_scales.hbar_c_eV_m;
}

} // namespace nuosc

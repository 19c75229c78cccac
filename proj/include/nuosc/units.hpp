#pragma once

namespace nuosc {

/// Conversion constants tying natural units (powers of eV) to laboratory units.
struct PhysicalScales {
    double hbar_c_eV_m; // hbar*c in eV*m
};

/// CODATA value of hbar*c. Everything internal is carried in powers of eV;
/// lengths cross the module boundary in meters through the two functions below.
inline constexpr PhysicalScales physical_scales{1.973269804e-7};

/// Convert a length in meters to natural units (eV^-1). Throws domain_error
/// for negative or non-finite input.
double length_to_natural(double length_m);

/// Convert a length in natural units (eV^-1) back to meters. Throws
/// domain_error for negative or non-finite input.
double natural_to_length(double length_nat);

} // namespace nuosc

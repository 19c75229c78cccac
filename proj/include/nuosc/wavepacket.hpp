#pragma once

namespace nuosc {

/// Plane-wave treatment keeps only the oscillation phases; wave-packet
/// treatment adds separation damping and localization suppression driven by
/// the packet width.
enum class TreatmentMode { plane_wave, wave_packet };

/// Wave-packet settings. sigma_x_m is the spatial packet width in meters;
/// rho scales the localization term (dimensionless, default 1).
struct WavePacketConfig {
    double sigma_x_m = 0.5e-9;
    double rho = 1.0;
    TreatmentMode mode = TreatmentMode::wave_packet;
};

} // namespace nuosc

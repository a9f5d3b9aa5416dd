#pragma once

#include <string>

namespace ionbridge {

/// Dimension classes for the closed unit set.
enum class Dimension {
    Length,
    Capacitance,
    Inductance,
    Frequency,
    Time,
    Temperature,
    Voltage,
    Resistance,
    Energy,
    WaveNumber,
    Angle,
    ForcePerCharge, // unused placeholder kept out of the table
    EnergyPerLength,
};

/// Exact multiplicative conversion between units of the same dimension.
/// Supported identifiers: m um(μm) nm | F fF | H pH | Hz kHz MHz GHz THz |
/// s ns us ms | K mK | V mV | Ohm(Ω) | eV J | 1/m | rad | J/m.
/// Throws ValidationError on unknown identifiers or dimension mismatch.
double unit_convert(double value, const std::string& from_unit, const std::string& to_unit);

/// Dimension of a unit identifier (throws on unknown).
Dimension unit_dimension(const std::string& unit);

/// Factor that converts one of `unit` into the SI base of its dimension.
double unit_to_si_factor(const std::string& unit);

/// Canonical SI base identifier for a dimension ("m", "F", ...).
std::string si_base_unit(Dimension dim);

} // namespace ionbridge

#include "ionbridge/units.hpp"

#include <map>

#include "ionbridge/constants.hpp"
#include "ionbridge/errors.hpp"

namespace ionbridge {

namespace {

struct UnitDef {
    Dimension dim;
    double to_si;
};

const std::map<std::string, UnitDef>& unit_table() {
    static const std::map<std::string, UnitDef> table = {
        {"m", {Dimension::Length, 1.0}},
        {"um", {Dimension::Length, 1e-6}},
        {"µm", {Dimension::Length, 1e-6}}, // µm
        {"μm", {Dimension::Length, 1e-6}}, // μm
        {"nm", {Dimension::Length, 1e-9}},
        {"F", {Dimension::Capacitance, 1.0}},
        {"fF", {Dimension::Capacitance, 1e-15}},
        {"H", {Dimension::Inductance, 1.0}},
        {"pH", {Dimension::Inductance, 1e-12}},
        {"Hz", {Dimension::Frequency, 1.0}},
        {"kHz", {Dimension::Frequency, 1e3}},
        {"MHz", {Dimension::Frequency, 1e6}},
        {"GHz", {Dimension::Frequency, 1e9}},
        {"THz", {Dimension::Frequency, 1e12}},
        {"s", {Dimension::Time, 1.0}},
        {"ms", {Dimension::Time, 1e-3}},
        {"us", {Dimension::Time, 1e-6}},
        {"ns", {Dimension::Time, 1e-9}},
        {"K", {Dimension::Temperature, 1.0}},
        {"mK", {Dimension::Temperature, 1e-3}},
        {"V", {Dimension::Voltage, 1.0}},
        {"mV", {Dimension::Voltage, 1e-3}},
        {"Ohm", {Dimension::Resistance, 1.0}},
        {"ohm", {Dimension::Resistance, 1.0}},
        {"Ω", {Dimension::Resistance, 1.0}}, // Ω
        {"J", {Dimension::Energy, 1.0}},
        {"eV", {Dimension::Energy, PhysicalConstants::e_charge}},
        {"1/m", {Dimension::WaveNumber, 1.0}},
        {"rad", {Dimension::Angle, 1.0}},
        {"J/m", {Dimension::EnergyPerLength, 1.0}},
    };
    return table;
}

const UnitDef& lookup(const std::string& unit) {
    auto it = unit_table().find(unit);
    if (it == unit_table().end())
        throw ValidationError("unknown unit identifier '" + unit + "'");
    return it->second;
}

} // namespace

Dimension unit_dimension(const std::string& unit) { return lookup(unit).dim; }

double unit_to_si_factor(const std::string& unit) { return lookup(unit).to_si; }

double unit_convert(double value, const std::string& from_unit, const std::string& to_unit) {
    const UnitDef& from = lookup(from_unit);
    const UnitDef& to = lookup(to_unit);
    if (from.dim != to.dim)
        throw ValidationError("incompatible units '" + from_unit + "' -> '" + to_unit + "'");
    return value * (from.to_si / to.to_si);
}

std::string si_base_unit(Dimension dim) {
    switch (dim) {
        case Dimension::Length: return "m";
        case Dimension::Capacitance: return "F";
        case Dimension::Inductance: return "H";
        case Dimension::Frequency: return "Hz";
        case Dimension::Time: return "s";
        case Dimension::Temperature: return "K";
        case Dimension::Voltage: return "V";
        case Dimension::Resistance: return "Ohm";
        case Dimension::Energy: return "J";
        case Dimension::WaveNumber: return "1/m";
        case Dimension::Angle: return "rad";
        case Dimension::EnergyPerLength: return "J/m";
        default: throw InvariantError("unmapped dimension");
    }
}

} // namespace ionbridge

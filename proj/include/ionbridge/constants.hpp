#pragma once

#include <array>
#include <cmath>
#include <string>

#include "ionbridge/errors.hpp"

namespace ionbridge {

/// CODATA 2018 values. Everything downstream computes in SI; unit
/// conversion happens only at the CLI boundary.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;      // J s
    static constexpr double e_charge = 1.602176634e-19;  // C
    static constexpr double eps0 = 8.8541878128e-12;     // F/m
    static constexpr double mu0 = 1.25663706212e-6;      // H/m
    static constexpr double k_B = 1.380649e-23;          // J/K
    static constexpr double amu = 1.66053906660e-27;     // kg
    static constexpr double m_electron = 9.1093837015e-31; // kg
    static constexpr double h_planck = 6.62607015e-34;   // J s

    /// R_k = hbar/(2e)^2, computed rather than stored.
    static constexpr double quantum_resistance() {
        return hbar / (4.0 * e_charge * e_charge);
    }
};

struct IonSpecies {
    std::string name;
    double mass; // kg

    static IonSpecies from_amu(std::string name, double mass_amu) {
        require(mass_amu > 0, "ion mass must be positive");
        return IonSpecies{std::move(name), mass_amu * PhysicalConstants::amu};
    }
};

/// Lookup in the built-in species table (Be-9, Ca-43). Throws on unknown names.
IonSpecies ion_species(const std::string& name);

/// Convenience: SI mass of a built-in species.
double ion_mass(const std::string& name);

struct TrapParams {
    double omega_nu = 0.0; // rad/s; 0 is the free-particle limit (analytic paths only)
    IonSpecies species;

    TrapParams() = default;
    TrapParams(double omega, IonSpecies sp) : omega_nu(omega), species(std::move(sp)) {
        require(omega_nu >= 0, "trap frequency must be non-negative");
        require(species.mass > 0, "ion mass must be positive");
    }

    /// Ground-state length x0 = sqrt(hbar / (2 m omega)). The ladder
    /// convention used throughout is x = x0 (a + a^dag).
    double ground_state_length() const {
        require(omega_nu > 0, "x0 is defined only for omega_nu > 0");
        return std::sqrt(PhysicalConstants::hbar / (2.0 * species.mass * omega_nu));
    }
};

/// One of the four joint sigma_z eigenvalue sectors (s: spin, q: charge).
/// Ordering (+,+), (+,-), (-,+), (-,-) is fixed for all serialization.
struct QubitBranch {
    int s = +1;
    int q = +1;

    int index() const { return (s > 0 ? 0 : 2) + (q > 0 ? 0 : 1); }
};

inline const std::array<QubitBranch, 4>& qubit_branches() {
    static const std::array<QubitBranch, 4> b = {{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};
    return b;
}

/// Coefficient of s*q in the branch decomposition
/// phi_b = phi0 + phis*s + phiq*q + phisq*s*q (phases in branch order).
inline double branch_sq_component(const std::array<double, 4>& phases) {
    return (phases[0] - phases[1] - phases[2] + phases[3]) / 4.0;
}

} // namespace ionbridge

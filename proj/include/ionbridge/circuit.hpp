#pragma once

#include <string>
#include <vector>

#include "ionbridge/constants.hpp"

namespace ionbridge {

/// Two parallel superconducting rods, spacing d0, radius b0, length L.
struct CavityGeometry {
    double rod_spacing = 0.0; // d0, m
    double rod_radius = 0.0;  // b0, m
    double length = 0.0;      // L, m

    void validate() const;
    double log_ratio() const; // ln(d0/b0)
};

struct CouplingCapacitors {
    double c_i = 0.0; // trap-electrode coupler, F
    double c_m = 0.0; // charge-qubit contact, F
    double c_j = 0.0; // junction, F
    double c_g = 0.0; // gate, F

    void validate() const;
    double c_t() const { return c_m + c_j + c_g; }
    double max_cap() const;
};

/// The text of the source derivation gives omega_r = 2/sqrt(L_r C_r), while
/// its own numeric example matches 1/sqrt(L_r C_r). Both are exposed; the
/// flag records which one a CircuitParams stores.
enum class OmegaRConvention { TwoOverSqrtLC, OneOverSqrtLC };

struct CircuitParams {
    double c_r = 0.0;     // cavity capacitance, F
    double l_r = 0.0;     // cavity inductance, H
    double omega_r = 0.0; // rad/s, per `convention`
    OmegaRConvention convention = OmegaRConvention::TwoOverSqrtLC;
    CouplingCapacitors caps;
    double ion_distance = 0.0; // d_i, m

    void validate() const;
};

double omega_r_two_over_sqrt(double l_r, double c_r);
double omega_r_one_over_sqrt(double l_r, double c_r);

/// Lumped-element parameters from rod geometry:
///   L_r = mu0 ln(d0/b0) L / pi^3,   C_r = 4 pi eps0 L / (4 ln(d0/b0)).
CircuitParams derive_circuit(const CavityGeometry& geom, const CouplingCapacitors& caps,
                             double ion_distance,
                             OmegaRConvention convention = OmegaRConvention::TwoOverSqrtLC);

/// Lumped-model validity: C_r must dominate every coupling capacitance
/// (ratio >= 5 passes silently, >= 2 warns, below 2 warns strongly).
/// Returned strings are advisory, never errors.
std::vector<std::string> lumped_validity_warnings(const CircuitParams& circ);

struct KappaResult {
    double kappa = 0.0;          // rad/(s m), from hbar*kappa = e^2 / (2 C_r d_i)
    double hbar_kappa = 0.0;     // J/m
    double eq_prefactor = 0.0;   // (e^2/C_r)(C_m/C_t)/d_i, J/m, full-interaction form
    double cyclic_ghz_per_unit_displacement = 0.0; // kappa*x/2pi at x = d_i, in GHz
};

KappaResult ion_charge_kappa(const CircuitParams& circ);

/// Trap-electrode bias and its balance branch. Perfect balance means
/// residue_voltage == 0.
struct BiasConfig {
    double v_g = 0.0;  // charge gate voltage, V
    double v_i = 0.0;  // trap electrode voltage, V
    double c_ib = 0.0; // balance capacitor, F
    double v_ib = 0.0; // balance voltage, V

    // effective unbalanced voltage: V_i + (C_ib/C_i) V_ib
    double residue_voltage(double c_i) const;
};

struct EffectiveInteraction {
    double xx_coupling = 0.0;      // coefficient of x*sigma_z^q, J/m
    double ion_force_shift = 0.0;  // static force on the ion from C_g V_g, N
    double charge_bias_shift = 0.0; // static sigma_z^q bias from the residue voltage, J
};

/// Decomposition of the second-order interaction
/// (e^2/C_r)(C_m/C_t)(x/d_i + C_i V/e)(sigma_z^q + C_g V_g/e),
/// with the residue voltage standing in for V_i.
EffectiveInteraction effective_interaction(const CircuitParams& circ, const BiasConfig& bias);

/// Coefficient of x1*x2 for two ions coupled through the cavity:
/// e^2 / (2 (C_r + 2 C_i) d_i^2), J/m^2.
double ion_ion_coupling(const CircuitParams& circ);

struct EnhancementFactors {
    double ion_charge = 0.0; // 4 ln(d0/b0) r0/d_i
    double ion_ion = 0.0;    // 4 ln(d0/b0) (L/d_i)^2
};

/// Coupling enhancement over free space at reference distance r0.
EnhancementFactors enhancement_factors(const CavityGeometry& geom, double ion_distance, double r0);

/// Free-space reference coupling at distance r0 used by the enhancement
/// consistency identity: e^2 / (2 hbar (4 pi eps0 L) r0).
double free_space_kappa(const CavityGeometry& geom, double r0);

} // namespace ionbridge

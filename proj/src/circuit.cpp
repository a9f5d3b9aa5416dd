#include "ionbridge/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "ionbridge/errors.hpp"

namespace ionbridge {

namespace {
constexpr double pi = 3.14159265358979323846;
using PC = PhysicalConstants;
} // namespace

void CavityGeometry::validate() const {
    require(rod_radius > 0, "cavity.b0 must be positive");
    require(rod_spacing > 2.0 * rod_radius, "cavity geometry requires d0 > 2*b0 (rods must not overlap)");
    require(length > 0, "cavity.length must be positive");
}

double CavityGeometry::log_ratio() const { return std::log(rod_spacing / rod_radius); }

void CouplingCapacitors::validate() const {
    require(c_i > 0 && c_m > 0 && c_j > 0 && c_g > 0, "all coupling capacitances must be positive");
}

double CouplingCapacitors::max_cap() const {
    return std::max(std::max(c_i, c_m), std::max(c_j, c_g));
}

void CircuitParams::validate() const {
    require(c_r > 0, "C_r must be positive");
    require(l_r > 0, "L_r must be positive");
    require(ion_distance > 0, "d_i must be positive");
    caps.validate();
    const double expected = convention == OmegaRConvention::TwoOverSqrtLC
                                ? omega_r_two_over_sqrt(l_r, c_r)
                                : omega_r_one_over_sqrt(l_r, c_r);
    if (std::abs(omega_r - expected) > 1e-9 * expected)
        throw InvariantError("omega_r inconsistent with stored convention flag");
}

double omega_r_two_over_sqrt(double l_r, double c_r) { return 2.0 / std::sqrt(l_r * c_r); }
double omega_r_one_over_sqrt(double l_r, double c_r) { return 1.0 / std::sqrt(l_r * c_r); }

CircuitParams derive_circuit(const CavityGeometry& geom, const CouplingCapacitors& caps,
                             double ion_distance, OmegaRConvention convention) {
    geom.validate();
    caps.validate();
    require(ion_distance > 0, "d_i must be positive");

    const double ln_ratio = geom.log_ratio();
    CircuitParams circ;
    circ.l_r = PC::mu0 * ln_ratio * geom.length / (pi * pi * pi);
    circ.c_r = 4.0 * pi * PC::eps0 * geom.length / (4.0 * ln_ratio);
    circ.convention = convention;
    circ.omega_r = convention == OmegaRConvention::TwoOverSqrtLC
                       ? omega_r_two_over_sqrt(circ.l_r, circ.c_r)
                       : omega_r_one_over_sqrt(circ.l_r, circ.c_r);
    circ.caps = caps;
    circ.ion_distance = ion_distance;
    return circ;
}

std::vector<std::string> lumped_validity_warnings(const CircuitParams& circ) {
    std::vector<std::string> warnings;
    const double ratio = circ.c_r / circ.caps.max_cap();
    if (ratio < 2.0) {
        warnings.push_back("lumped model invalid: C_r / max coupling capacitance = " +
                           std::to_string(ratio) + " (needs C_r >> C_i, C_m, C_J, C_g)");
    } else if (ratio < 5.0) {
        warnings.push_back("lumped model marginal: C_r / max coupling capacitance = " +
                           std::to_string(ratio) + " < 5");
    }
    return warnings;
}

KappaResult ion_charge_kappa(const CircuitParams& circ) {
    circ.validate();
    KappaResult r;
    r.hbar_kappa = PC::e_charge * PC::e_charge / (2.0 * circ.c_r * circ.ion_distance);
    r.kappa = r.hbar_kappa / PC::hbar;
    r.eq_prefactor = (PC::e_charge * PC::e_charge / circ.c_r) *
                     (circ.caps.c_m / circ.caps.c_t()) / circ.ion_distance;
    // coupling in cyclic-frequency units for a displacement of one d_i
    r.cyclic_ghz_per_unit_displacement = r.kappa * circ.ion_distance / (2.0 * pi) / 1e9;
    return r;
}

double BiasConfig::residue_voltage(double c_i) const {
    require(c_i > 0, "C_i must be positive");
    return v_i + (c_ib / c_i) * v_ib;
}

EffectiveInteraction effective_interaction(const CircuitParams& circ, const BiasConfig& bias) {
    circ.validate();
    const double prefactor = (PC::e_charge * PC::e_charge / circ.c_r) *
                             (circ.caps.c_m / circ.caps.c_t());
    const double residue = bias.residue_voltage(circ.caps.c_i);

    EffectiveInteraction out;
    out.xx_coupling = prefactor / circ.ion_distance;
    // cross term (x/d_i)(C_g V_g / e): a static force shifting the trap minimum
    out.ion_force_shift = prefactor * (circ.caps.c_g * bias.v_g / PC::e_charge) / circ.ion_distance;
    // cross term (C_i V/e) sigma_z^q with the residue voltage in place of V_i
    out.charge_bias_shift = prefactor * (circ.caps.c_i * residue / PC::e_charge);
    return out;
}

double ion_ion_coupling(const CircuitParams& circ) {
    circ.validate();
    const double di2 = circ.ion_distance * circ.ion_distance;
    return PC::e_charge * PC::e_charge / (2.0 * (circ.c_r + 2.0 * circ.caps.c_i) * di2);
}

EnhancementFactors enhancement_factors(const CavityGeometry& geom, double ion_distance, double r0) {
    geom.validate();
    require(ion_distance > 0, "d_i must be positive");
    require(r0 > 0, "free-space reference distance r0 must be positive");
    const double four_ln = 4.0 * geom.log_ratio();
    EnhancementFactors f;
    f.ion_charge = four_ln * r0 / ion_distance;
    const double ratio = geom.length / ion_distance;
    f.ion_ion = four_ln * ratio * ratio;
    return f;
}

double free_space_kappa(const CavityGeometry& geom, double r0) {
    geom.validate();
    require(r0 > 0, "r0 must be positive");
    const double c_free = 4.0 * pi * PC::eps0 * geom.length;
    return PC::e_charge * PC::e_charge / (2.0 * PC::hbar * c_free * r0);
}

} // namespace ionbridge

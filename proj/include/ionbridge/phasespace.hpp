#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "ionbridge/constants.hpp"
#include "ionbridge/gateplan.hpp"

namespace ionbridge {

/// Exact per-branch coherent-state evolution. The gate Hamiltonian is
/// diagonal in the joint sigma_z^s, sigma_z^q basis, so each of the four
/// branches carries an independent coherent amplitude and scalar phase.
struct BranchState {
    QubitBranch branch;
    std::complex<double> amp{0.0, 0.0}; // coherent amplitude
    double phase = 0.0;                 // accumulated phase (not wrapped)
    std::complex<double> weight{0.5, 0.0}; // initial qubit amplitude
};

/// Momentum kick exp(-i k x) as a displacement D(beta), beta = -i k x0, with
/// D(beta)|a> = e^{i Im(beta conj(a))} |a + beta>. Requires omega_nu > 0.
BranchState apply_kick(const BranchState& state, double k, const TrapParams& trap);

/// Oscillator rotation exp(-i angle a^dag a): amp -> amp e^{-i angle},
/// phase untouched (coherent states pick up no number-operator phase here).
BranchState apply_rotation(const BranchState& state, double angle);

struct MotionalInput {
    enum class Kind { Coherent, Thermal, FockDelegate };
    Kind kind = Kind::Coherent;
    std::complex<double> amp0{0.0, 0.0}; // coherent amplitude
    double nbar = 0.0;                   // thermal occupation
    int samples = 1;                     // thermal Monte Carlo samples
    std::uint64_t seed = 0;              // thermal stream seed
    int fock_n = 0;                      // Fock level (oracle engine only)

    static MotionalInput coherent(std::complex<double> amp0);
    static MotionalInput thermal(double nbar, int samples, std::uint64_t seed);
    static MotionalInput fock_delegate(int n);
};

struct SimResult {
    std::array<BranchState, 4> branches; // branch order (+,+),(+,-),(-,+),(-,-)
    double entangling_alpha = 0.0;       // -phisq of the vacuum-input branch phases
    double fidelity = 0.0;
    double residual_disp = 0.0;          // m: max |amp_b - amp_ideal| * x0 * 2
};

/// Run the eight-pulse sequence on a coherent input. Rejects thermal and
/// Fock inputs (use thermal_fidelity / the Fock oracle).
SimResult run_sequence(const PulseSchedule& sched, const TrapParams& trap,
                       const MotionalInput& input);

/// Fidelity of evolved branches against the ideal gate
/// exp(-i alpha_target sz sz) acting on (|+>|+>) x |amp0>, with the ideal
/// motional state amp0 e^{-i omega T_gate} shared by all branches and the
/// global phase maximized out:
///   F = |(1/4) sum_b e^{i(phi_b - phi_b^id)} <a_id|a_b>|^2.
double fidelity_vs_ideal(const std::array<BranchState, 4>& branches,
                         const PulseSchedule& sched, const TrapParams& trap,
                         std::complex<double> amp0, double alpha_target);

/// Coherent-state overlap <beta|alpha> = exp(-(|a|^2+|b|^2)/2 + conj(b) a).
std::complex<double> coherent_overlap(std::complex<double> bra, std::complex<double> ket);

struct ThermalFidelityResult {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo thermal average of the gate fidelity, amp0 drawn from the
/// P-function Gaussian with <|amp0|^2> = nbar. Sample i derives from seed+i,
/// so parallel and serial evaluation orders agree bit-for-bit.
ThermalFidelityResult thermal_fidelity(const PulseSchedule& sched, const TrapParams& trap,
                                       double nbar, int samples, std::uint64_t seed);

/// Closed-form thermal average. The branch evolution is affine in amp0, so
/// the Gaussian integral evaluates exactly; agrees with the Monte Carlo
/// estimate within sampling error. Used as a fast path and cross-check.
double thermal_fidelity_analytic(const PulseSchedule& sched, const TrapParams& trap, double nbar);

/// Deterministic thermal sample: complex Gaussian with <|z|^2> = nbar drawn
/// from a stream seeded with seed + index (Box-Muller over mt19937_64).
std::complex<double> thermal_sample(double nbar, std::uint64_t seed, std::uint64_t index);

} // namespace ionbridge

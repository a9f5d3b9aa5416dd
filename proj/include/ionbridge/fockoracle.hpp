#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ionbridge/constants.hpp"
#include "ionbridge/gateplan.hpp"
#include "ionbridge/phasespace.hpp"

namespace ionbridge {

/// Truncated number-basis state over oscillator x spin x charge, stored
/// branch-major in the fixed (+,+),(+,-),(-,+),(-,-) order. Qubit weights
/// are folded into the branch blocks, so the full norm is 1.
struct FockState {
    int dim_osc = 0;
    Eigen::VectorXcd amplitudes; // length 4*dim_osc

    double norm() const { return amplitudes.norm(); }
    Eigen::VectorXcd branch_block(int index) const;
};

struct FockOperators {
    Eigen::MatrixXcd a;
    Eigen::MatrixXcd adag;
    Eigen::MatrixXcd x_op; // x0 (a + a^dag), units of m
};

/// Standard ladder construction, a[n-1, n] = sqrt(n). Requires N >= 8.
FockOperators build_operators(int dim, const TrapParams& trap);

/// exp(-i angle G) psi via eigendecomposition of the hermitian generator G.
/// Rejects non-hermitian input (tolerance 1e-12 relative to max element).
Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const Eigen::MatrixXcd& generator,
                        double angle);

/// Coherent amplitude alpha as a truncated vector, built by exponentiating
/// the displacement generator (no closed-form coherent expansion here).
Eigen::VectorXcd displaced_vacuum(int dim, std::complex<double> alpha);

struct FockRunResult {
    FockState state;
    double fidelity = 0.0;
    double entangling_alpha = 0.0;
    double fidelity_std_error = 0.0; // thermal inputs only
    double leakage = 0.0;            // max over steps of population in the top 8 levels
    int dim_used = 0;
};

/// Full 4N-dimensional run of the eight-pulse sequence. Kicks act as
/// block-diagonal conditional matrix exponentials of x_op; the fidelity
/// target matches the phase-space definition represented in the truncated
/// basis; alpha comes from the branch phases of a vacuum-input run.
/// Truncation starts at `dim` and doubles (up to max_dim) while the leakage
/// monitor exceeds 1e-8; a NumericalError reports the required larger basis.
FockRunResult run_sequence_fock(const PulseSchedule& sched, const TrapParams& trap,
                                const MotionalInput& input, int dim = 128, int max_dim = 512);

struct TruncationRow {
    int dim = 0;
    double fidelity = 0.0;
    double alpha = 0.0;
    double leakage = 0.0;
    bool converged = false; // |F(N) - F(previous N)| < 1e-8
};

/// Convergence control: run at each truncation in ascending order and flag
/// where consecutive fidelities agree below 1e-8.
std::vector<TruncationRow> truncation_sweep(const PulseSchedule& sched, const TrapParams& trap,
                                            const MotionalInput& input,
                                            const std::vector<int>& dims);

} // namespace ionbridge

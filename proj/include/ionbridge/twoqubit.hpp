#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ionbridge {

using Mat4 = Eigen::Matrix4cd;

/// Basis order |s q> = |00>,|01>,|10>,|11> with sigma_z|0> = +|0>.
/// Qubit 0 is the spin, qubit 1 the charge.

/// exp(-i alpha sigma_z (x) sigma_z) = diag(e^-ia, e^ia, e^ia, e^-ia).
Mat4 zz_exponential(double alpha);

Mat4 hadamard_on(int qubit);
Mat4 rz_on(int qubit, double angle); // exp(-i angle/2 sigma_z) on one qubit
Mat4 swap_matrix();

/// min over global phase of the operator-norm distance ||U - e^{i phi} T||_2.
double phase_optimized_distance(const Mat4& u, const Mat4& target);

struct CircuitOp {
    enum class Kind { Hadamard, RotZ, Entangler };
    Kind kind;
    int qubit = 0;      // Hadamard / RotZ target
    double angle = 0.0; // RotZ angle (rad)
};

struct SwapComposition {
    std::vector<CircuitOp> ops; // applied left-to-right in time
    double global_phase = 0.0;  // accumulated scalar phase of the product
    double residual_error = 0.0; // phase-optimized distance from SWAP
};

/// Compose SWAP from three applications of the given entangling unitary plus
/// Hadamards and z-rotations: each CZ block is
/// e^{-i pi/4} (Rz(-pi/2) (x) Rz(-pi/2)) U_zz, and SWAP = CNOT01 CNOT10 CNOT01.
/// The input must be of the form e^{i phi0} exp(-i alpha sigma_z (x) sigma_z)
/// (diagonal, unit modulus, within 1e-9) with alpha near pi/4; the realized
/// residual grows linearly with the alpha detuning.
SwapComposition compose_swap(const Mat4& entangler);

} // namespace ionbridge

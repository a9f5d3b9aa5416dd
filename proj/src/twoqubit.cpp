#include "ionbridge/twoqubit.hpp"

#include <cmath>

#include "ionbridge/errors.hpp"

namespace ionbridge {

namespace {
constexpr double pi = 3.14159265358979323846;
using cd = std::complex<double>;

Eigen::Matrix2cd hadamard2() {
    Eigen::Matrix2cd h;
    const double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    return h;
}

Eigen::Matrix2cd rz2(double angle) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(cd(0, -angle / 2.0));
    m(1, 1) = std::exp(cd(0, angle / 2.0));
    return m;
}

Mat4 kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Mat4 on_qubit(int qubit, const Eigen::Matrix2cd& g) {
    require(qubit == 0 || qubit == 1, "two-qubit register has qubits 0 and 1");
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return qubit == 0 ? kron2(g, id) : kron2(id, g);
}
} // namespace

Mat4 zz_exponential(double alpha) {
    Mat4 m = Mat4::Zero();
    const cd lo = std::exp(cd(0, -alpha));
    const cd hi = std::exp(cd(0, alpha));
    m(0, 0) = lo;
    m(1, 1) = hi;
    m(2, 2) = hi;
    m(3, 3) = lo;
    return m;
}

Mat4 hadamard_on(int qubit) { return on_qubit(qubit, hadamard2()); }

Mat4 rz_on(int qubit, double angle) { return on_qubit(qubit, rz2(angle)); }

Mat4 swap_matrix() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

double phase_optimized_distance(const Mat4& u, const Mat4& target) {
    const cd tr = (target.adjoint() * u).trace();
    const double phi = std::arg(tr);
    const Mat4 diff = u - std::exp(cd(0, phi)) * target;
    Eigen::JacobiSVD<Mat4> svd(diff);
    return svd.singularValues()(0);
}

SwapComposition compose_swap(const Mat4& entangler) {
    // form check: diagonal, unit modulus, phases of the sigma_z x sigma_z
    // exponential pattern (phi, -phi, -phi, phi) up to a global phase
    const double off = (entangler - Mat4(entangler.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    require(off <= 1e-9, "entangler is not diagonal in the sigma_z basis");
    for (int i = 0; i < 4; ++i)
        require(std::abs(std::abs(entangler(i, i)) - 1.0) <= 1e-9, "entangler is not unitary diagonal");

    const double p0 = std::arg(entangler(0, 0));
    const double p1 = std::arg(entangler(1, 1));
    const double p2 = std::arg(entangler(2, 2));
    const double p3 = std::arg(entangler(3, 3));
    auto wrap = [](double a) { return std::remainder(a, 2.0 * pi); };
    require(std::abs(wrap(p0 - p3)) <= 1e-9 && std::abs(wrap(p1 - p2)) <= 1e-9,
            "entangler lacks the sigma_z*sigma_z exponential symmetry");
    const double alpha = -wrap(p0 - p1) / 2.0;
    require(std::abs(alpha - pi / 4.0) <= 0.1,
            "entangler phase alpha = " + std::to_string(alpha) + " is not near pi/4");

    SwapComposition out;
    // CZ block: e^{-i pi/4} (Rz(-pi/2) x Rz(-pi/2)) * entangler
    auto cz_block = [&](Mat4& acc, int h_qubit) {
        acc = hadamard_on(h_qubit) * acc;
        acc = entangler * acc;
        acc = rz_on(0, -pi / 2.0) * acc;
        acc = rz_on(1, -pi / 2.0) * acc;
        acc = hadamard_on(h_qubit) * acc;
        out.ops.push_back({CircuitOp::Kind::Hadamard, h_qubit, 0.0});
        out.ops.push_back({CircuitOp::Kind::Entangler, 0, 0.0});
        out.ops.push_back({CircuitOp::Kind::RotZ, 0, -pi / 2.0});
        out.ops.push_back({CircuitOp::Kind::RotZ, 1, -pi / 2.0});
        out.ops.push_back({CircuitOp::Kind::Hadamard, h_qubit, 0.0});
        out.global_phase += -pi / 4.0;
    };

    Mat4 acc = Mat4::Identity();
    cz_block(acc, 1); // CNOT (control spin, target charge)
    cz_block(acc, 0); // CNOT (control charge, target spin)
    cz_block(acc, 1);
    acc *= std::exp(cd(0, out.global_phase));

    out.residual_error = phase_optimized_distance(acc, swap_matrix());
    return out;
}

} // namespace ionbridge

#include "ionbridge/fockoracle.hpp"

#include <cmath>

#include "ionbridge/errors.hpp"
#include "ionbridge/pulse_sequence.hpp"

namespace ionbridge {

namespace {
using cd = std::complex<double>;

constexpr double leakage_limit = 1e-8;
constexpr int leakage_levels = 8;
constexpr double norm_tol = 1e-9;

struct SpectralKicker {
    // cached eigensystem of x_op; a kick exp(-i k x) is two basis changes
    // around a diagonal phase, identical to evolve() arithmetic
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;

    explicit SpectralKicker(const Eigen::MatrixXcd& x_op) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x_op);
        if (es.info() != Eigen::Success)
            throw NumericalError("eigendecomposition of the position operator failed");
        vectors = es.eigenvectors();
        values = es.eigenvalues();
    }

    Eigen::VectorXcd kick(const Eigen::VectorXcd& psi, double k) const {
        Eigen::VectorXcd coeffs = vectors.adjoint() * psi;
        for (Eigen::Index i = 0; i < coeffs.size(); ++i)
            coeffs(i) *= std::exp(cd(0.0, -k * values(i)));
        return vectors * coeffs;
    }
};

double top_level_population(const Eigen::VectorXcd& psi) {
    const Eigen::Index n = psi.size();
    const Eigen::Index from = std::max<Eigen::Index>(0, n - leakage_levels);
    return psi.segment(from, n - from).squaredNorm();
}

struct BranchRun {
    std::array<Eigen::VectorXcd, 4> psi;
    double max_leakage = 0.0;
};

BranchRun evolve_fock_branches(const PulseSchedule& sched, const TrapParams& trap, int dim,
                               const Eigen::VectorXcd& input, const SpectralKicker& kicker) {
    const auto steps = expand_sequence(sched, trap.omega_nu);
    Eigen::VectorXcd rotation_phases(dim);
    BranchRun run;
    for (const QubitBranch& b : qubit_branches()) {
        Eigen::VectorXcd psi = input;
        for (const PulseStep& step : steps) {
            switch (step.kind) {
                case PulseStep::Kind::SpinKick:
                    psi = kicker.kick(psi, step.value * b.s);
                    break;
                case PulseStep::Kind::ChargeKick:
                    psi = kicker.kick(psi, step.value * b.q);
                    break;
                case PulseStep::Kind::Rotate:
                    for (int n = 0; n < dim; ++n)
                        psi(n) *= std::exp(cd(0.0, -step.value * n));
                    break;
            }
            run.max_leakage = std::max(run.max_leakage, top_level_population(psi));
            if (std::abs(psi.norm() - 1.0) > norm_tol)
                throw InvariantError("Fock evolution norm drifted beyond 1e-9");
        }
        run.psi[b.index()] = psi;
    }
    return run;
}

double wrap_angle(double a) { return std::remainder(a, 2.0 * 3.14159265358979323846); }

double alpha_from_vacuum_run(const BranchRun& run, int dim) {
    // arg<ideal_b|psi_b> with the ideal motional state = vacuum (rotation
    // invariant), combined pairwise so each difference stays within (-pi, pi]
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(dim);
    vac(0) = 1.0;
    std::array<double, 4> ph{};
    for (int i = 0; i < 4; ++i) ph[i] = std::arg(vac.dot(run.psi[i]));
    const double d1 = wrap_angle(ph[0] - ph[1]);
    const double d2 = wrap_angle(ph[3] - ph[2]);
    return -(d1 + d2) / 4.0;
}

struct SingleRun {
    BranchRun branches;
    double fidelity = 0.0;
};

SingleRun run_single(const PulseSchedule& sched, const TrapParams& trap, int dim,
                     const Eigen::VectorXcd& input_vec, cd ideal_amp, double alpha_cf,
                     const SpectralKicker& kicker) {
    SingleRun out;
    out.branches = evolve_fock_branches(sched, trap, dim, input_vec, kicker);
    const Eigen::VectorXcd ideal_m = displaced_vacuum(dim, ideal_amp);
    cd sum(0.0, 0.0);
    for (const QubitBranch& b : qubit_branches()) {
        const cd ov = ideal_m.dot(out.branches.psi[b.index()]); // <ideal|psi>
        sum += 0.25 * std::exp(cd(0.0, alpha_cf * b.s * b.q)) * ov;
    }
    out.fidelity = std::norm(sum);
    return out;
}

} // namespace

Eigen::VectorXcd FockState::branch_block(int index) const {
    require(index >= 0 && index < 4, "branch index out of range");
    return amplitudes.segment(static_cast<Eigen::Index>(index) * dim_osc, dim_osc);
}

FockOperators build_operators(int dim, const TrapParams& trap) {
    require(dim >= 8, "Fock truncation must be at least 8 levels");
    FockOperators ops;
    ops.a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
    ops.adag = ops.a.adjoint();
    ops.x_op = trap.ground_state_length() * (ops.a + ops.adag);
    return ops;
}

Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const Eigen::MatrixXcd& generator,
                        double angle) {
    const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
    const double herm_defect = (generator - generator.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-12 * scale)
        throw ValidationError("evolve() generator is not hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generator);
    if (es.info() != Eigen::Success) throw NumericalError("generator eigendecomposition failed");
    Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * state;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs(i) *= std::exp(cd(0.0, -angle * es.eigenvalues()(i)));
    return es.eigenvectors() * coeffs;
}

Eigen::VectorXcd displaced_vacuum(int dim, cd alpha) {
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(dim);
    vac(0) = 1.0;
    if (alpha == cd(0.0, 0.0)) return vac;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    // D(alpha) = exp(alpha a^dag - conj(alpha) a) = exp(-i G),
    // G = i (alpha a^dag - conj(alpha) a)
    const Eigen::MatrixXcd gen = cd(0.0, 1.0) * (alpha * a.adjoint() - std::conj(alpha) * a);
    return evolve(vac, gen, 1.0);
}

FockRunResult run_sequence_fock(const PulseSchedule& sched, const TrapParams& trap,
                                const MotionalInput& input, int dim, int max_dim) {
    sched.validate();
    require(trap.omega_nu > 0, "Fock oracle needs omega_nu > 0");
    require(dim >= 8, "Fock truncation must be at least 8 levels");
    const double alpha_cf = entangling_phase(sched, trap.species.mass);
    const cd rot = std::exp(cd(0.0, -trap.omega_nu * sched.total_time()));

    for (int n_dim = dim;; n_dim *= 2) {
        const FockOperators ops = build_operators(n_dim, trap);
        const SpectralKicker kicker(ops.x_op);

        double max_leakage = 0.0;
        FockRunResult res;
        res.dim_used = n_dim;

        const BranchRun vac_run =
            evolve_fock_branches(sched, trap, n_dim, displaced_vacuum(n_dim, cd(0, 0)), kicker);
        max_leakage = std::max(max_leakage, vac_run.max_leakage);
        res.entangling_alpha = alpha_from_vacuum_run(vac_run, n_dim);

        if (input.kind == MotionalInput::Kind::Thermal) {
            double mean = 0.0, m2 = 0.0;
            std::vector<double> f(static_cast<std::size_t>(input.samples));
            for (int i = 0; i < input.samples; ++i) {
                const cd a0 = thermal_sample(input.nbar, input.seed, static_cast<std::uint64_t>(i));
                const SingleRun r = run_single(sched, trap, n_dim, displaced_vacuum(n_dim, a0),
                                               a0 * rot, alpha_cf, kicker);
                max_leakage = std::max(max_leakage, r.branches.max_leakage);
                f[static_cast<std::size_t>(i)] = r.fidelity;
            }
            for (double v : f) mean += v;
            mean /= static_cast<double>(input.samples);
            for (double v : f) m2 += (v - mean) * (v - mean);
            res.fidelity = mean;
            res.fidelity_std_error =
                input.samples > 1 ? std::sqrt(m2 / (input.samples - 1.0) / input.samples) : 0.0;
            res.state.dim_osc = n_dim;
            res.state.amplitudes = Eigen::VectorXcd::Zero(4 * n_dim);
            for (int b = 0; b < 4; ++b)
                res.state.amplitudes.segment(static_cast<Eigen::Index>(b) * n_dim, n_dim) =
                    0.5 * vac_run.psi[b];
        } else {
            Eigen::VectorXcd input_vec;
            cd ideal_amp;
            if (input.kind == MotionalInput::Kind::FockDelegate) {
                require(input.fock_n >= 0 && input.fock_n < n_dim - leakage_levels,
                        "Fock level outside the trusted truncation window");
                input_vec = Eigen::VectorXcd::Zero(n_dim);
                input_vec(input.fock_n) = 1.0;
                ideal_amp = cd(0.0, 0.0); // ideal motional state handled below
            } else {
                input_vec = displaced_vacuum(n_dim, input.amp0);
                ideal_amp = input.amp0 * rot;
            }

            if (input.kind == MotionalInput::Kind::FockDelegate) {
                // ideal motional state: rotated Fock level, a pure phase
                const BranchRun run =
                    evolve_fock_branches(sched, trap, n_dim, input_vec, kicker);
                max_leakage = std::max(max_leakage, run.max_leakage);
                Eigen::VectorXcd ideal = Eigen::VectorXcd::Zero(n_dim);
                ideal(input.fock_n) = std::exp(
                    cd(0.0, -trap.omega_nu * sched.total_time() * input.fock_n));
                cd sum(0.0, 0.0);
                for (const QubitBranch& b : qubit_branches())
                    sum += 0.25 * std::exp(cd(0.0, alpha_cf * b.s * b.q)) *
                           ideal.dot(run.psi[b.index()]);
                res.fidelity = std::norm(sum);
                res.state.dim_osc = n_dim;
                res.state.amplitudes = Eigen::VectorXcd::Zero(4 * n_dim);
                for (int b = 0; b < 4; ++b)
                    res.state.amplitudes.segment(static_cast<Eigen::Index>(b) * n_dim, n_dim) =
                        0.5 * run.psi[b];
            } else {
                const SingleRun r =
                    run_single(sched, trap, n_dim, input_vec, ideal_amp, alpha_cf, kicker);
                max_leakage = std::max(max_leakage, r.branches.max_leakage);
                res.fidelity = r.fidelity;
                res.state.dim_osc = n_dim;
                res.state.amplitudes = Eigen::VectorXcd::Zero(4 * n_dim);
                for (int b = 0; b < 4; ++b)
                    res.state.amplitudes.segment(static_cast<Eigen::Index>(b) * n_dim, n_dim) =
                        0.5 * r.branches.psi[b];
            }
        }

        res.leakage = max_leakage;
        if (max_leakage < leakage_limit) return res;
        if (2 * n_dim > max_dim)
            throw NumericalError(
                "Fock truncation " + std::to_string(n_dim) + " leaks " +
                std::to_string(max_leakage) +
                " (> 1e-8); a basis larger than the cap of " + std::to_string(max_dim) +
                " would be required");
    }
}

std::vector<TruncationRow> truncation_sweep(const PulseSchedule& sched, const TrapParams& trap,
                                            const MotionalInput& input,
                                            const std::vector<int>& dims) {
    require(!dims.empty(), "truncation sweep needs at least one dimension");
    for (std::size_t i = 1; i < dims.size(); ++i)
        require(dims[i] > dims[i - 1], "truncation list must be ascending");

    std::vector<TruncationRow> rows;
    for (int n_dim : dims) {
        TruncationRow row;
        row.dim = n_dim;
        // no escalation here: the sweep reports each truncation as-is
        try {
            const FockRunResult r = run_sequence_fock(sched, trap, input, n_dim, n_dim);
            row.fidelity = r.fidelity;
            row.alpha = r.entangling_alpha;
            row.leakage = r.leakage;
        } catch (const NumericalError&) {
            // leakage beyond the trusted bound; report the raw run at this size
            const FockRunResult r = [&] {
                FockRunResult out;
                const FockOperators ops = build_operators(n_dim, trap);
                const SpectralKicker kicker(ops.x_op);
                const BranchRun vac = evolve_fock_branches(sched, trap, n_dim,
                                                           displaced_vacuum(n_dim, cd(0, 0)), kicker);
                out.entangling_alpha = alpha_from_vacuum_run(vac, n_dim);
                const cd a0 = input.kind == MotionalInput::Kind::Coherent ? input.amp0 : cd(0, 0);
                const cd rot = std::exp(cd(0.0, -trap.omega_nu * sched.total_time()));
                const SingleRun sr =
                    run_single(sched, trap, n_dim, displaced_vacuum(n_dim, a0), a0 * rot,
                               entangling_phase(sched, trap.species.mass), kicker);
                out.fidelity = sr.fidelity;
                out.leakage = std::max(vac.max_leakage, sr.branches.max_leakage);
                return out;
            }();
            row.fidelity = r.fidelity;
            row.alpha = r.entangling_alpha;
            row.leakage = r.leakage;
        }
        if (!rows.empty())
            row.converged = std::abs(row.fidelity - rows.back().fidelity) < 1e-8;
        rows.push_back(row);
    }
    return rows;
}

} // namespace ionbridge

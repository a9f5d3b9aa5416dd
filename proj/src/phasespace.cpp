#include "ionbridge/phasespace.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "ionbridge/errors.hpp"
#include "ionbridge/pulse_sequence.hpp"

namespace ionbridge {

namespace {
using cd = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

std::array<BranchState, 4> evolve_branches(const PulseSchedule& sched, const TrapParams& trap,
                                           cd amp0) {
    require(trap.omega_nu > 0,
            "phase-space engine needs omega_nu > 0 (the free-particle limit is analytic)");
    const auto steps = expand_sequence(sched, trap.omega_nu);

    std::array<BranchState, 4> out;
    for (const QubitBranch& b : qubit_branches()) {
        BranchState st;
        st.branch = b;
        st.amp = amp0;
        st.weight = cd(0.5, 0.0); // |+>_s |+>_q
        for (const PulseStep& step : steps) {
            switch (step.kind) {
                case PulseStep::Kind::SpinKick:
                    st = apply_kick(st, step.value * b.s, trap);
                    break;
                case PulseStep::Kind::ChargeKick:
                    st = apply_kick(st, step.value * b.q, trap);
                    break;
                case PulseStep::Kind::Rotate:
                    st = apply_rotation(st, step.value);
                    break;
            }
        }
        out[b.index()] = st;
    }
    return out;
}

double extract_alpha_from_phases(const std::array<double, 4>& phases) {
    return -branch_sq_component(phases);
}

} // namespace

MotionalInput MotionalInput::coherent(cd amp0) {
    MotionalInput in;
    in.kind = Kind::Coherent;
    in.amp0 = amp0;
    return in;
}

MotionalInput MotionalInput::thermal(double nbar, int samples, std::uint64_t seed) {
    require(nbar >= 0, "nbar must be non-negative");
    require(samples >= 1, "thermal input needs samples >= 1");
    MotionalInput in;
    in.kind = Kind::Thermal;
    in.nbar = nbar;
    in.samples = samples;
    in.seed = seed;
    return in;
}

MotionalInput MotionalInput::fock_delegate(int n) {
    require(n >= 0, "Fock level must be non-negative");
    MotionalInput in;
    in.kind = Kind::FockDelegate;
    in.fock_n = n;
    return in;
}

BranchState apply_kick(const BranchState& state, double k, const TrapParams& trap) {
    require(trap.omega_nu > 0, "apply_kick requires omega_nu > 0");
    const cd beta(0.0, -k * trap.ground_state_length());
    BranchState out = state;
    out.phase += std::imag(beta * std::conj(state.amp));
    out.amp += beta;
    return out;
}

BranchState apply_rotation(const BranchState& state, double angle) {
    BranchState out = state;
    out.amp *= std::exp(cd(0.0, -angle));
    return out;
}

cd coherent_overlap(cd bra, cd ket) {
    return std::exp(-(std::norm(ket) + std::norm(bra)) / 2.0 + std::conj(bra) * ket);
}

double fidelity_vs_ideal(const std::array<BranchState, 4>& branches, const PulseSchedule& sched,
                         const TrapParams& trap, cd amp0, double alpha_target) {
    const cd amp_ideal = amp0 * std::exp(cd(0.0, -trap.omega_nu * sched.total_time()));
    cd sum(0.0, 0.0);
    for (const BranchState& st : branches) {
        const double phi_ideal = -alpha_target * st.branch.s * st.branch.q;
        sum += 0.25 * std::exp(cd(0.0, st.phase - phi_ideal)) * coherent_overlap(amp_ideal, st.amp);
    }
    return std::norm(sum);
}

SimResult run_sequence(const PulseSchedule& sched, const TrapParams& trap,
                       const MotionalInput& input) {
    if (input.kind == MotionalInput::Kind::FockDelegate)
        throw ValidationError("phase-space engine rejects fock_delegate inputs (use the Fock oracle)");
    if (input.kind == MotionalInput::Kind::Thermal)
        throw ValidationError("run_sequence takes a coherent input; use thermal_fidelity for thermal averages");

    SimResult res;
    res.branches = evolve_branches(sched, trap, input.amp0);

    // alpha comes from the vacuum-input phases: with amp0 != 0 the kick
    // phases acquire input-dependent branch components that are not part of
    // the gate phase
    std::array<double, 4> vac_phases{};
    if (std::abs(input.amp0) == 0.0) {
        for (int i = 0; i < 4; ++i) vac_phases[i] = res.branches[i].phase;
    } else {
        const auto vac = evolve_branches(sched, trap, cd(0.0, 0.0));
        for (int i = 0; i < 4; ++i) vac_phases[i] = vac[i].phase;
    }
    res.entangling_alpha = extract_alpha_from_phases(vac_phases);

    const double alpha_cf = entangling_phase(sched, trap.species.mass);
    res.fidelity = fidelity_vs_ideal(res.branches, sched, trap, input.amp0, alpha_cf);

    const double x0 = trap.ground_state_length();
    const cd amp_ideal = input.amp0 * std::exp(cd(0.0, -trap.omega_nu * sched.total_time()));
    double dmax = 0.0;
    for (const BranchState& st : res.branches)
        dmax = std::max(dmax, std::abs(st.amp - amp_ideal));
    res.residual_disp = dmax * x0 * 2.0;
    return res;
}

std::complex<double> thermal_sample(double nbar, std::uint64_t seed, std::uint64_t index) {
    if (nbar == 0.0) return {0.0, 0.0};
    std::mt19937_64 rng(seed + index);
    // Box-Muller on explicit 53-bit uniforms keeps the stream identical
    // across standard libraries
    auto uniform = [&rng]() { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; };
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double g1 = r * std::cos(2.0 * pi * u2);
    const double g2 = r * std::sin(2.0 * pi * u2);
    return std::sqrt(nbar / 2.0) * cd(g1, g2);
}

ThermalFidelityResult thermal_fidelity(const PulseSchedule& sched, const TrapParams& trap,
                                       double nbar, int samples, std::uint64_t seed) {
    require(nbar >= 0, "nbar must be non-negative");
    require(samples >= 1, "samples must be >= 1");
    const double alpha_cf = entangling_phase(sched, trap.species.mass);

    std::vector<double> f(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const cd a0 = thermal_sample(nbar, seed, static_cast<std::uint64_t>(i));
        const auto branches = evolve_branches(sched, trap, a0);
        f[static_cast<std::size_t>(i)] = fidelity_vs_ideal(branches, sched, trap, a0, alpha_cf);
    }
    double mean = 0.0;
    for (double v : f) mean += v;
    mean /= static_cast<double>(samples);
    double var = 0.0;
    for (double v : f) var += (v - mean) * (v - mean);
    ThermalFidelityResult out;
    out.mean = mean;
    out.std_error = samples > 1 ? std::sqrt(var / (samples - 1.0) / samples) : 0.0;
    return out;
}

double thermal_fidelity_analytic(const PulseSchedule& sched, const TrapParams& trap, double nbar) {
    require(nbar >= 0, "nbar must be non-negative");
    const double alpha_cf = entangling_phase(sched, trap.species.mass);
    const double theta_tot = trap.omega_nu * sched.total_time();
    const cd u = std::exp(cd(0.0, -theta_tot));

    // The evolution is affine in amp0: amp_b = u amp0 + d_b and
    // phi_b(amp0) = phi_b(0) + Im(conj(amp0) v_b). Three probe runs
    // (amp0 = 0, 1, i) recover d_b and v_b; the thermal Gaussian average of
    // the 16 overlap cross terms is then exact:
    //   Fbar = sum_{b,b'} K_b conj(K_b') exp(-nbar |g_b - g_b'|^2 / 4),
    // g_b = v_b + conj(u) d_b.
    const auto br0 = evolve_branches(sched, trap, cd(0.0, 0.0));
    const auto br1 = evolve_branches(sched, trap, cd(1.0, 0.0));
    const auto brj = evolve_branches(sched, trap, cd(0.0, 1.0));

    std::array<cd, 4> K, g;
    for (int b = 0; b < 4; ++b) {
        const cd d = br0[b].amp;
        const double phi0 = br0[b].phase;
        const double v_im = br1[b].phase - phi0;    // Im(conj(1) v) = Im(v)
        const double v_re = -(brj[b].phase - phi0); // Im(conj(i) v) = -Re(v)
        const cd v(v_re, v_im);
        const int s = qubit_branches()[b].s, q = qubit_branches()[b].q;
        K[b] = 0.25 * std::exp(cd(0.0, phi0 + alpha_cf * s * q)) * std::exp(-std::norm(d) / 2.0);
        g[b] = v + std::conj(u) * d;
    }
    double fbar = 0.0;
    for (int b = 0; b < 4; ++b)
        for (int bp = 0; bp < 4; ++bp)
            fbar += std::real(K[b] * std::conj(K[bp]) *
                              std::exp(-nbar * std::norm(g[b] - g[bp]) / 4.0));
    return fbar;
}

} // namespace ionbridge

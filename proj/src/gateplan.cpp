#include "ionbridge/gateplan.hpp"

#include <cmath>

#include "ionbridge/errors.hpp"

namespace ionbridge {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double matching_tol = 1e-9;
using PC = PhysicalConstants;
} // namespace

void PulseSchedule::validate() const {
    require(n_l1 > 0 && n_l1 % 2 == 0, "n_l1 must be a positive even integer");
    require(n_l2 > 0 && n_l2 % 2 == 0, "n_l2 must be a positive even integer");
    require(z_l1 == 1 || z_l1 == -1, "z_l1 must be +-1");
    require(z_l2 == 1 || z_l2 == -1, "z_l2 must be +-1");
    require(z_l1 == z_l2,
            "kick groups must share one direction (the signed matching condition "
            "z_l1 n_l1 t1 = z_l2 n_l2 t2 fails otherwise)");
    require(tau_q1 > 0 && tau_q2 > 0, "coupling windows must be positive");
    require(t1 > 0 && t2 > 0, "free-flight times must be positive");
    require(delta_k > 0, "delta_k must be positive");
    require(kappa > 0, "kappa must be positive");

    const double kick_lhs = static_cast<double>(n_l1) * t1;
    const double kick_rhs = static_cast<double>(n_l2) * t2;
    require(std::abs(kick_lhs - kick_rhs) <= matching_tol * kick_lhs,
            "matching condition n_l1*t1 = n_l2*t2 violated");
    const double win_lhs = tau_q1 * t1;
    const double win_rhs = tau_q2 * t2;
    require(std::abs(win_lhs - win_rhs) <= matching_tol * win_lhs,
            "matching condition tau_q1*t1 = tau_q2*t2 violated");
}

double PulseSchedule::window_rotation(double omega_nu) const {
    return omega_nu * std::max(tau_q1, tau_q2);
}

std::vector<std::string> schedule_warnings(const PulseSchedule& sched, double omega_nu) {
    std::vector<std::string> w;
    const double wt = sched.window_rotation(omega_nu);
    if (wt > 0.01)
        w.push_back("omega_nu*tau_q = " + std::to_string(wt) +
                    " exceeds 0.01; instantaneous-window approximation degrades");
    const double wT = omega_nu * sched.total_time();
    if (wT > 0.5)
        w.push_back("omega_nu*T_gate = " + std::to_string(wT) +
                    " approaches 1; fidelity leaves the quadratic-error regime "
                    "(prefer a lower trapping frequency)");
    return w;
}

double entangling_phase(const PulseSchedule& sched, double mass) {
    sched.validate();
    require(mass > 0, "mass must be positive");
    const double z = static_cast<double>(sched.z_l1);
    return z * PC::hbar * sched.kappa * sched.delta_k * sched.tau_q1 *
           static_cast<double>(sched.n_l1) * sched.t1 * (sched.t1 + sched.t2) /
           (mass * sched.t2);
}

double gate_time(const PulseSchedule& sched, double mass) {
    const double alpha = entangling_phase(sched, mass);
    const double target = pi / 4.0;
    if (std::abs(std::abs(alpha) - target) > 1e-6 * target)
        throw ValidationError("gate_time applies to the pi/4 gate only; schedule has alpha = " +
                              std::to_string(alpha));
    const double kick_term = pi * mass / (4.0 * PC::hbar * sched.kappa * sched.delta_k) *
                             (1.0 / (static_cast<double>(sched.n_l1) * sched.t1) +
                              1.0 / (static_cast<double>(sched.n_l2) * sched.t2));
    return kick_term + sched.t1 + sched.t2;
}

GatePlanResult plan_schedule(double mass, double kappa, double delta_k, int n_l1,
                             double t1, double t2, double target_alpha, int z) {
    require(mass > 0 && kappa > 0 && delta_k > 0, "mass, kappa, delta_k must be positive");
    require(t1 > 0 && t2 > 0, "t1, t2 must be positive");
    require(n_l1 > 0 && n_l1 % 2 == 0, "n_l1 must be a positive even integer");
    require(target_alpha > 0, "target_alpha must be positive (degenerate schedule otherwise)");
    require(z == 1 || z == -1, "kick direction must be +-1");

    // round the second kick count to an even integer, then restore the
    // matching condition exactly by re-adjusting t2
    const double n2_ideal = static_cast<double>(n_l1) * t1 / t2;
    int n_l2 = static_cast<int>(2.0 * std::round(n2_ideal / 2.0));
    if (n_l2 < 2) n_l2 = 2;
    if (std::abs(n_l2 - n2_ideal) > 0.5 * n2_ideal)
        throw ValidationError("no even kick count near n_l1*t1/t2 = " + std::to_string(n2_ideal) +
                              "; adjust t1/t2 or n_l1");
    const double t2_adj = static_cast<double>(n_l1) * t1 / static_cast<double>(n_l2);

    PulseSchedule s;
    s.n_l1 = n_l1;
    s.n_l2 = n_l2;
    s.z_l1 = s.z_l2 = z;
    s.t1 = t1;
    s.t2 = t2_adj;
    s.delta_k = delta_k;
    s.kappa = kappa;
    s.tau_q1 = target_alpha * mass * t2_adj /
               (PC::hbar * kappa * delta_k * static_cast<double>(n_l1) * t1 * (t1 + t2_adj));
    s.tau_q2 = s.tau_q1 * t1 / t2_adj;
    s.validate();

    GatePlanResult out;
    out.schedule = s;
    out.alpha = entangling_phase(s, mass);
    if (std::abs(std::abs(out.alpha) - target_alpha) > 1e-9 * target_alpha)
        throw InvariantError("planned schedule failed to reproduce target_alpha");
    out.t_gate = s.total_time();
    if (std::abs(std::abs(out.alpha) - pi / 4.0) <= 1e-6 * (pi / 4.0)) {
        const double t_eq = gate_time(s, mass);
        out.eq_time_residual = std::abs(t_eq - out.t_gate) / out.t_gate;
    }
    return out;
}

} // namespace ionbridge

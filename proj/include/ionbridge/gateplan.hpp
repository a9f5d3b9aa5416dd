#pragma once

#include <string>
#include <vector>

#include "ionbridge/constants.hpp"

namespace ionbridge {

/// The eight-pulse gate timing. Kick counts n_l1/n_l2 are even; the two
/// matching conditions n_l1*t1 = n_l2*t2 and tau_q1*t1 = tau_q2*t2 make the
/// momentum-space trajectory close and the qubit phases factor out.
struct PulseSchedule {
    int n_l1 = 0;          // laser kick count, group 1 (even, > 0)
    int n_l2 = 0;          // laser kick count, group 2 (even, > 0)
    int z_l1 = +1;         // kick direction, group 1
    int z_l2 = +1;         // kick direction, group 2
    double tau_q1 = 0.0;   // charge coupling window 1, s
    double tau_q2 = 0.0;   // charge coupling window 2, s
    double t1 = 0.0;       // free flight 1, s
    double t2 = 0.0;       // free flight 2, s
    double delta_k = 0.0;  // single-kick momentum, 1/m
    double kappa = 0.0;    // ion-charge coupling, rad/(s m)

    void validate() const;

    /// Wall-clock gate duration 2(tau_q1+tau_q2) + t1 + t2.
    double total_time() const { return 2.0 * (tau_q1 + tau_q2) + t1 + t2; }

    /// max(omega * tau_q): the instantaneous-window approximation degrades
    /// above ~0.01 (advisory threshold).
    double window_rotation(double omega_nu) const;
};

/// Advisory validity notes for a schedule in a given trap (never errors).
std::vector<std::string> schedule_warnings(const PulseSchedule& sched, double omega_nu);

/// Closed-form entangling phase of the eight-pulse free-particle product:
///   alpha = z * hbar kappa delta_k tau_q1 n_l1 t1 (t1 + t2) / (m t2).
/// The sign follows the common kick direction z = z_l1 = z_l2; flipping both
/// directions flips alpha while leaving |alpha| unchanged.
double entangling_phase(const PulseSchedule& sched, double mass);

/// Total gate time for the pi/4 phase gate,
///   T = pi m / (4 hbar kappa delta_k) (1/(n_l1 t1) + 1/(n_l2 t2)) + t1 + t2.
/// Precondition: |entangling_phase| = pi/4 within 1e-6 relative (reported
/// otherwise). For valid schedules this equals total_time() exactly.
double gate_time(const PulseSchedule& sched, double mass);

struct GatePlanResult {
    double alpha = 0.0;  // achieved entangling phase, rad
    double t_gate = 0.0; // s
    PulseSchedule schedule;
    double eq_time_residual = 0.0; // |gate_time - total_time| / total_time (pi/4 plans)
};

/// Solve the closed form for tau_q1 given a target phase. n_l2 is rounded to
/// the nearest even integer and t2 re-adjusted so both matching conditions
/// hold exactly. Throws if no even n_l2 lies within 50% of the ideal ratio.
GatePlanResult plan_schedule(double mass, double kappa, double delta_k, int n_l1,
                             double t1, double t2, double target_alpha, int z = +1);

} // namespace ionbridge

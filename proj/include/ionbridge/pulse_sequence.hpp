#pragma once

#include <vector>

#include "ionbridge/gateplan.hpp"

namespace ionbridge {

/// One elementary operation of the expanded gate sequence. Kick values are
/// signed wavenumbers (1/m) before the branch eigenvalue is applied: a spin
/// kick k acts as exp(-i k s x), a charge kick as exp(-i k q x). Rotations
/// are oscillator phase advances exp(-i angle a^dag a).
struct PulseStep {
    enum class Kind { SpinKick, ChargeKick, Rotate };
    Kind kind;
    double value; // wavenumber (1/m) for kicks, angle (rad) for rotations
};

/// Expand a schedule into the ordered operator list both engines consume
/// (earliest operation first):
///
///   charge kick  kappa*tau_q1
///   spin kick    z*delta_k*n_l1
///   rotate       omega*t1
///   charge kick -kappa*(tau_q1+tau_q2)
///   spin kick   -z*delta_k*(n_l1+n_l2)
///   rotate       omega*t2
///   charge kick  kappa*tau_q2
///   spin kick    z*delta_k*n_l2
///   rotate       omega*2*(tau_q1+tau_q2)
///
/// Coupling windows act as instantaneous kicks of strength kappa*tau_q; their
/// wall-clock duration is booked as the trailing idle rotation so the total
/// elapsed time equals total_time() without perturbing the kick kinematics
/// of the ideal pulse product.
std::vector<PulseStep> expand_sequence(const PulseSchedule& sched, double omega_nu);

} // namespace ionbridge

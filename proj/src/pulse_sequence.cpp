#include "ionbridge/pulse_sequence.hpp"

namespace ionbridge {

std::vector<PulseStep> expand_sequence(const PulseSchedule& s, double omega_nu) {
    s.validate();
    const double z = static_cast<double>(s.z_l1);
    const double n1 = static_cast<double>(s.n_l1);
    const double n2 = static_cast<double>(s.n_l2);
    using K = PulseStep::Kind;
    return {
        {K::ChargeKick, s.kappa * s.tau_q1},
        {K::SpinKick, z * s.delta_k * n1},
        {K::Rotate, omega_nu * s.t1},
        {K::ChargeKick, -s.kappa * (s.tau_q1 + s.tau_q2)},
        {K::SpinKick, -z * s.delta_k * (n1 + n2)},
        {K::Rotate, omega_nu * s.t2},
        {K::ChargeKick, s.kappa * s.tau_q2},
        {K::SpinKick, z * s.delta_k * n2},
        {K::Rotate, omega_nu * 2.0 * (s.tau_q1 + s.tau_q2)},
    };
}

} // namespace ionbridge

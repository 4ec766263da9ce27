#pragma once

#include "exosynth/jacobian.hpp"

namespace exosynth {

/// Joint torques in flexion-positive coordinates (N*mm). Positive values
/// drive the finger toward closure.
struct JointTorques {
    double tau1 = 0.0;  // MCP
    double tau2 = 0.0;  // PIP
};

/// Force applied by the linear actuator (N) plus the torque at the measured
/// joint B, which the statics model fixes at zero.
struct ActuatorWrench {
    double f_ac = 0.0;
    static constexpr double tau_B = 0.0;
};

/// tau_fin = J_A^-T [f_ac; 0], re-expressed flexion-positive (the internal
/// q_o angles decrease under flexion, so the conjugate pair is negated).
/// Computed by solving the transposed system, no explicit inverse.
/// Throws OutputSingular.
JointTorques joint_torques(const ReducedJacobian& ja, const ActuatorWrench& wrench);

/// Virtual-work consistency of the statics with the reduced Jacobian:
/// returns tau_fin . (J_A qdot_m) - tau_m . qdot_m with both sides taken in
/// the conjugate q_o basis; identically zero up to roundoff.
double power_balance(const ReducedJacobian& ja, const ActuatorWrench& wrench,
                     const Vec2& qdot_m);

enum class GraspStability { Stable, Unstable, Indeterminate };

/// Stable iff both torques share one sign (both drive opening or both drive
/// closure). Indeterminate when either |tau| < 1e-12 N*mm.
GraspStability grasp_stability(const JointTorques& torques);

/// tau1 / tau2. Throws RatioUndefined when tau2 == 0.
double torque_ratio(const JointTorques& torques);

}  // namespace exosynth

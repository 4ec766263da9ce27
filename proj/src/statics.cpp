#include "exosynth/statics.hpp"

#include <Eigen/LU>

#include <cmath>

namespace exosynth {

namespace {

/// Conjugate (q_o basis) torque pair from Eq.-form statics: solve
/// J_A^T tau_fin = tau_m.
Vec2 conjugate_torques(const ReducedJacobian& ja, const ActuatorWrench& wrench) {
    const Mat2 jat = ja.J_A.transpose();
    Eigen::FullPivLU<Mat2> lu(jat);
    if (!lu.isInvertible()) {
        throw OutputSingular("joint_torques: J_A^T is singular");
    }
    const Vec2 tau_m(wrench.f_ac, ActuatorWrench::tau_B);
    return lu.solve(tau_m);
}

}  // namespace

JointTorques joint_torques(const ReducedJacobian& ja, const ActuatorWrench& wrench) {
    const Vec2 t = conjugate_torques(ja, wrench);
    // flexion decreases the q_o angles, so the flexion-positive pair is the
    // negated conjugate pair
    return {-t(0), -t(1)};
}

double power_balance(const ReducedJacobian& ja, const ActuatorWrench& wrench,
                     const Vec2& qdot_m) {
    const Vec2 tau_fin = conjugate_torques(ja, wrench);
    const Vec2 qdot_fin = ja.J_A * qdot_m;
    const Vec2 tau_m(wrench.f_ac, ActuatorWrench::tau_B);
    return tau_fin.dot(qdot_fin) - tau_m.dot(qdot_m);
}

GraspStability grasp_stability(const JointTorques& torques) {
    constexpr double kZero = 1e-12;  // N*mm
    if (std::abs(torques.tau1) < kZero || std::abs(torques.tau2) < kZero) {
        return GraspStability::Indeterminate;
    }
    return std::signbit(torques.tau1) == std::signbit(torques.tau2)
               ? GraspStability::Stable
               : GraspStability::Unstable;
}

double torque_ratio(const JointTorques& torques) {
    if (torques.tau2 == 0.0) {
        throw RatioUndefined("torque_ratio: tau2 is zero");
    }
    return torques.tau1 / torques.tau2;
}

}  // namespace exosynth

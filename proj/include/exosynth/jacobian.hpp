#pragma once

#include "exosynth/geometry.hpp"
#include "exosynth/solver.hpp"

namespace exosynth {

/// Block partition of the differentiated closure equations,
///
///   [J_Om; J_Op] qdot_fin = [J_Tm J_Tp; J_Cm J_Cp] [qdot_m; qdot_p]
///
/// with qdot_fin = [qo1', qo2'], qdot_m = [lx', qB'],
/// qdot_p = [qK', qD', qG', qN', c1', c2'].
///
/// Equation rows are pinned as: total rows (top) = [L2x, L3x];
/// constraint rows (bottom) = [L2y, L3y, L1x, L1y, L4x, L4y]. This order
/// keeps every block away from the all-zero degeneracy over the workspace:
/// the top rows carry the finger-pose terms of Loops 2 and 3, the bottom
/// block keeps one row of each so the c_1 and c_2 columns of J_Cp stay
/// populated, and Loops 1 and 4 contribute the l_x, q_N and q_G columns.
/// Permuting this order is a breaking change.
struct JacobianBlocks {
    Mat2 J_Om;
    Mat62 J_Op;
    Mat2 J_Tm;
    Mat26 J_Tp;
    Mat62 J_Cm;
    Mat6 J_Cp;
};

/// 2x2 map from measured velocities [lx', qB'] to [qo1', qo2'].
struct ReducedJacobian {
    Mat2 J_A;
    double condition = 0.0;  // spectral condition number of J_A
};

/// Populate the Eq.-partition blocks from the analytic loop derivatives at a
/// solved state.
JacobianBlocks assemble_blocks(const MechanismState& state, const FingerPose& pose,
                               const Geometry& geom);

/// Coefficients of the passive-velocity map qdot_p = P_fin qdot_fin + P_m qdot_m,
/// i.e. P_fin = J_Cp^-1 J_Op and P_m = -J_Cp^-1 J_Cm.
/// Throws PassiveSingular when cond(J_Cp) > 1e12.
struct PassiveMap {
    Mat62 P_fin;
    Mat62 P_m;
};
PassiveMap eliminate_passive(const JacobianBlocks& blocks);

/// J_A = [J_Om - J_Tp J_Cp^-1 J_Op]^-1 [J_Tm - J_Tp J_Cp^-1 J_Cm].
/// Throws PassiveSingular / OutputSingular.
ReducedJacobian reduced_jacobian(const JacobianBlocks& blocks);

/// Convenience: solve the pose and reduce in one call.
ReducedJacobian reduced_jacobian_at(const FingerPose& pose, const Geometry& geom,
                                    const SolverSettings& settings = {});

/// Independent verification oracle: central-difference estimate of
/// d(q_o1, q_o2)/d(l_x, q_B) obtained by perturbing one measured coordinate,
/// holding both fixed, and re-solving the closure equations with the finger
/// angles freed. Propagates solver failures.
Mat2 fd_jacobian_oracle(const FingerPose& pose, const Geometry& geom, double h,
                        const SolverSettings& settings = {});

inline constexpr double kPassiveConditionCap = 1e12;

}  // namespace exosynth

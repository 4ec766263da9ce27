#pragma once

#include "exosynth/geometry.hpp"
#include "exosynth/types.hpp"

namespace exosynth {

/// The four planar vector-loop sums, evaluated exactly as printed.
///
///   Loop 1:  l_x e^{iq_N} + l_AB e^{iq_B} + l_BK e^{iq_K}
///          + l_KN e^{iq_KN} + l_act e^{iq_N}
///   Loop 2:  l_BK e^{iq_K} + l_BC e^{iq_B} + l_CI e^{iq_B}
///          + c_1 e^{iq_o1} + l_LK e^{iq_LK}
///   Loop 3:  l_BK e^{iq_K} + l_BD e^{iq_B} + l_DE e^{iq_D} + l_EJ e^{iq_D}
///          + c_2 e^{iq_o2} + l_ML e^{iq_o1} + l_LK e^{iq_LK}
///   Loop 4:  l_BH e^{iq_K} + l_HG e^{iq_K} + l_GF e^{iq_G} + l_FD e^{iq_D}
///          + l_DB e^{i q_db}
///
/// with l_BK = L_KB, l_BC = L_BC, l_CI = L_CI, l_DE = L_ED, l_EJ = L_EJ,
/// l_GF = L_GF, l_DB = l_BD, and q_db = q_K or q_B per geom.db_angle.
/// Each component is zero at a consistent configuration. All terms are
/// homogeneous of degree 1 in the lengths and strokes.
///
Residual8 loop_residuals(const MechanismState& state, const FingerPose& pose,
                         const Geometry& geom);

/// Analytic derivative of loop_residuals with respect to the 8 state
/// variables, columns in MechanismState vector order
/// [l_x, c_1, c_2, q_B, q_D, q_G, q_K, q_N].
Mat8 loop_state_jacobian(const MechanismState& state, const FingerPose& pose,
                         const Geometry& geom);

/// Analytic derivative of loop_residuals with respect to [q_o1, q_o2].
Mat82 loop_pose_jacobian(const MechanismState& state, const FingerPose& pose,
                         const Geometry& geom);

}  // namespace exosynth

#include "exosynth/loops.hpp"

namespace exosynth {

Residual8 loop_residuals(const MechanismState& s, const FingerPose& p, const Geometry& g) {
    const DerivedSegments d = composite_lengths(g);
    const Vec2 uN = unit(s.q_N);
    const Vec2 uB = unit(s.q_B);
    const Vec2 uK = unit(s.q_K);
    const Vec2 uD = unit(s.q_D);
    const Vec2 uG = unit(s.q_G);
    const Vec2 u1 = unit(p.q_o1);
    const Vec2 u2 = unit(p.q_o2);
    const Vec2 uKN = unit(g.q_KN);
    const Vec2 uLK = unit(g.q_LK);

    const Vec2 loop1 = s.l_x * uN + g.L_AB * uB + g.L_KB * uK + g.l_KN * uKN + g.l_act * uN;
    const Vec2 loop2 = g.L_KB * uK + g.L_BC * uB + g.L_CI * uB + s.c_1 * u1 + g.l_LK * uLK;
    const Vec2 loop3 = g.L_KB * uK + d.l_BD * uB + g.L_ED * uD + g.L_EJ * uD + s.c_2 * u2 +
                       g.l_ML * u1 + g.l_LK * uLK;
    const Vec2 uDB = g.db_angle == DbAngle::corrected_qB ? uB : uK;
    const Vec2 loop4 = d.l_BH * uK + d.l_HG * uK + g.L_GF * uG + d.l_FD * uD + d.l_BD * uDB;

    Residual8 r;
    r << loop1, loop2, loop3, loop4;
    return r;
}

Mat8 loop_state_jacobian(const MechanismState& s, const FingerPose& p, const Geometry& g) {
    const DerivedSegments d = composite_lengths(g);
    const Vec2 uN = unit(s.q_N);
    const Vec2 duN = unit_deriv(s.q_N);
    const Vec2 duB = unit_deriv(s.q_B);
    const Vec2 duK = unit_deriv(s.q_K);
    const Vec2 duD = unit_deriv(s.q_D);
    const Vec2 duG = unit_deriv(s.q_G);
    const Vec2 u1 = unit(p.q_o1);
    const Vec2 u2 = unit(p.q_o2);

    Mat8 J = Mat8::Zero();
    // columns: [l_x, c_1, c_2, q_B, q_D, q_G, q_K, q_N]
    // Loop 1 rows 0-1
    J.block<2, 1>(0, 0) = uN;
    J.block<2, 1>(0, 3) = g.L_AB * duB;
    J.block<2, 1>(0, 6) = g.L_KB * duK;
    J.block<2, 1>(0, 7) = (s.l_x + g.l_act) * duN;
    // Loop 2 rows 2-3
    J.block<2, 1>(2, 1) = u1;
    J.block<2, 1>(2, 3) = (g.L_BC + g.L_CI) * duB;
    J.block<2, 1>(2, 6) = g.L_KB * duK;
    // Loop 3 rows 4-5
    J.block<2, 1>(4, 2) = u2;
    J.block<2, 1>(4, 3) = d.l_BD * duB;
    J.block<2, 1>(4, 4) = (g.L_ED + g.L_EJ) * duD;
    J.block<2, 1>(4, 6) = g.L_KB * duK;
    // Loop 4 rows 6-7
    J.block<2, 1>(6, 4) = d.l_FD * duD;
    J.block<2, 1>(6, 5) = g.L_GF * duG;
    J.block<2, 1>(6, 6) = (d.l_BH + d.l_HG) * duK;
    if (g.db_angle == DbAngle::corrected_qB) {
        J.block<2, 1>(6, 3) += d.l_BD * duB;
    } else {
        J.block<2, 1>(6, 6) += d.l_BD * duK;
    }
    return J;
}

Mat82 loop_pose_jacobian(const MechanismState& s, const FingerPose& p, const Geometry& g) {
    const Vec2 du1 = unit_deriv(p.q_o1);
    const Vec2 du2 = unit_deriv(p.q_o2);

    Mat82 J = Mat82::Zero();
    // columns: [q_o1, q_o2]
    J.block<2, 1>(2, 0) = s.c_1 * du1;        // Loop 2
    J.block<2, 1>(4, 0) = g.l_ML * du1;       // Loop 3
    J.block<2, 1>(4, 1) = s.c_2 * du2;
    return J;
}

}  // namespace exosynth

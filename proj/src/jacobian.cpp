#include "exosynth/jacobian.hpp"

#include "exosynth/errors.hpp"
#include "exosynth/loops.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <array>

namespace exosynth {

namespace {

// Residual row indices: [L1x, L1y, L2x, L2y, L3x, L3y, L4x, L4y].
// Pinned equation order for the Eq. partition (see JacobianBlocks docs).
constexpr std::array<int, 2> kTotalRows = {2, 4};              // L2x, L3x
constexpr std::array<int, 6> kConstraintRows = {3, 5, 0, 1, 6, 7};  // L2y, L3y, L1x, L1y, L4x, L4y

// State-vector column index of each passive coordinate, in the pinned
// passive order [q_K, q_D, q_G, q_N, c_1, c_2].
constexpr std::array<int, 6> kPassiveCols = {6, 4, 5, 7, 1, 2};
// Measured coordinates [l_x, q_B].
constexpr std::array<int, 2> kMeasuredCols = {0, 3};

}  // namespace

JacobianBlocks assemble_blocks(const MechanismState& state, const FingerPose& pose,
                               const Geometry& geom) {
    const Mat8 dr_dstate = loop_state_jacobian(state, pose, geom);
    const Mat82 dr_dpose = loop_pose_jacobian(state, pose, geom);

    // dr/dfin qdot_fin + dr/dm qdot_m + dr/dp qdot_p = 0 rearranged to
    // (dr/dfin) qdot_fin = (-dr/dm) qdot_m + (-dr/dp) qdot_p.
    JacobianBlocks b;
    for (int i = 0; i < 2; ++i) {
        const int row = kTotalRows[i];
        b.J_Om.row(i) = dr_dpose.row(row);
        for (int j = 0; j < 2; ++j) b.J_Tm(i, j) = -dr_dstate(row, kMeasuredCols[j]);
        for (int j = 0; j < 6; ++j) b.J_Tp(i, j) = -dr_dstate(row, kPassiveCols[j]);
    }
    for (int i = 0; i < 6; ++i) {
        const int row = kConstraintRows[i];
        b.J_Op.row(i) = dr_dpose.row(row);
        for (int j = 0; j < 2; ++j) b.J_Cm(i, j) = -dr_dstate(row, kMeasuredCols[j]);
        for (int j = 0; j < 6; ++j) b.J_Cp(i, j) = -dr_dstate(row, kPassiveCols[j]);
    }
    return b;
}

namespace {

double condition_2x2(const Mat2& m) {
    Eigen::JacobiSVD<Mat2> svd(m);
    const double smin = svd.singularValues()(1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return svd.singularValues()(0) / smin;
}

Eigen::FullPivLU<Mat6> checked_cp_lu(const JacobianBlocks& blocks) {
    Eigen::JacobiSVD<Mat6> svd(blocks.J_Cp);
    const double smin = svd.singularValues()(5);
    const double smax = svd.singularValues()(0);
    if (smin == 0.0 || smax / smin > kPassiveConditionCap) {
        throw PassiveSingular("eliminate_passive: J_Cp condition number above cap");
    }
    return Eigen::FullPivLU<Mat6>(blocks.J_Cp);
}

}  // namespace

PassiveMap eliminate_passive(const JacobianBlocks& blocks) {
    auto lu = checked_cp_lu(blocks);
    PassiveMap map;
    map.P_fin = lu.solve(blocks.J_Op);
    map.P_m = -lu.solve(blocks.J_Cm);
    return map;
}

ReducedJacobian reduced_jacobian(const JacobianBlocks& blocks) {
    auto lu = checked_cp_lu(blocks);
    const Mat62 cp_op = lu.solve(blocks.J_Op);
    const Mat62 cp_cm = lu.solve(blocks.J_Cm);
    const Mat2 lhs = blocks.J_Om - blocks.J_Tp * cp_op;
    const Mat2 rhs = blocks.J_Tm - blocks.J_Tp * cp_cm;
    Eigen::FullPivLU<Mat2> lhs_lu(lhs);
    if (!lhs_lu.isInvertible()) {
        throw OutputSingular("reduced_jacobian: output 2x2 block is singular");
    }
    ReducedJacobian out;
    out.J_A = lhs_lu.solve(rhs);
    out.condition = condition_2x2(out.J_A);
    return out;
}

ReducedJacobian reduced_jacobian_at(const FingerPose& pose, const Geometry& geom,
                                    const SolverSettings& settings) {
    const MechanismState state = solve_pose(pose, geom, std::nullopt, settings);
    return reduced_jacobian(assemble_blocks(state, pose, geom));
}

namespace {

/// Solve the closure equations with (l_x, q_B) clamped and (q_o1, q_o2)
/// freed. Unknown order: [q_o1, q_o2, c_1, c_2, q_D, q_G, q_K, q_N].
struct FreedPoseSolution {
    FingerPose pose;
    MechanismState state;
};

FreedPoseSolution solve_freed(const MechanismState& base, const FingerPose& pose_guess,
                              const Geometry& geom, const SolverSettings& settings) {
    Vec8 y;
    y << pose_guess.q_o1, pose_guess.q_o2, base.c_1, base.c_2, base.q_D, base.q_G,
        base.q_K, base.q_N;

    auto unpack = [&base](const Vec8& v) {
        FingerPose p{v(0), v(1)};
        MechanismState s = base;  // keeps the clamped l_x, q_B
        s.c_1 = v(2);
        s.c_2 = v(3);
        s.q_D = v(4);
        s.q_G = v(5);
        s.q_K = v(6);
        s.q_N = v(7);
        return FreedPoseSolution{p, s};
    };
    auto residual = [&](const Vec8& v) {
        const auto fs = unpack(v);
        return loop_residuals(fs.state, fs.pose, geom);
    };

    double norm = residual(y).cwiseAbs().maxCoeff();
    for (int it = 0; it < settings.max_iter; ++it) {
        if (norm < settings.tol_residual) return unpack(y);
        Mat8 J;
        for (int i = 0; i < 8; ++i) {
            Vec8 yp = y, ym = y;
            yp(i) += settings.fd_step;
            ym(i) -= settings.fd_step;
            J.col(i) = (residual(yp) - residual(ym)) / (2.0 * settings.fd_step);
        }
        Eigen::FullPivLU<Mat8> lu(J);
        if (!lu.isInvertible()) {
            throw SingularIteration("fd_jacobian_oracle: freed system singular");
        }
        const Vec8 dy = lu.solve(-residual(y));
        double lambda = 1.0;
        bool stepped = false;
        for (int ls = 0; ls < 40; ++ls) {
            const Vec8 yn = y + lambda * dy;
            const double nn = residual(yn).cwiseAbs().maxCoeff();
            if (nn < norm) {
                y = yn;
                norm = nn;
                stepped = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!stepped) break;
    }
    if (norm < settings.tol_residual) return unpack(y);
    throw NoConvergence("fd_jacobian_oracle: freed closure solve failed");
}

}  // namespace

Mat2 fd_jacobian_oracle(const FingerPose& pose, const Geometry& geom, double h,
                        const SolverSettings& settings) {
    if (!(h > 0.0)) throw ConfigError("fd_jacobian_oracle: h must be > 0");
    const MechanismState base = solve_pose(pose, geom, std::nullopt, settings);

    Mat2 J;
    for (int col = 0; col < 2; ++col) {
        MechanismState plus = base, minus = base;
        if (col == 0) {
            plus.l_x += h;
            minus.l_x -= h;
        } else {
            plus.q_B += h;
            minus.q_B -= h;
        }
        const auto sp = solve_freed(plus, pose, geom, settings);
        const auto sm = solve_freed(minus, pose, geom, settings);
        J(0, col) = (sp.pose.q_o1 - sm.pose.q_o1) / (2.0 * h);
        J(1, col) = (sp.pose.q_o2 - sm.pose.q_o2) / (2.0 * h);
    }
    return J;
}

}  // namespace exosynth

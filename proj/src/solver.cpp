#include "exosynth/solver.hpp"

#include "exosynth/errors.hpp"

#include <Eigen/LU>

#include <cmath>
#include <string>

namespace exosynth {

namespace {

Mat8 numeric_jacobian(const Vec8& x, const FingerPose& pose, const Geometry& geom,
                      double h) {
    Mat8 J;
    for (int i = 0; i < 8; ++i) {
        Vec8 xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        const Residual8 rp = loop_residuals(MechanismState::from_vector(xp), pose, geom);
        const Residual8 rm = loop_residuals(MechanismState::from_vector(xm), pose, geom);
        J.col(i) = (rp - rm) / (2.0 * h);
    }
    return J;
}

bool branch_escaped(const Vec8& start, const Vec8& end) {
    // angle entries live in slots 3..7
    for (int i = 3; i < 8; ++i) {
        if (std::abs(end(i) - start(i)) > kPi / 2.0) return true;
    }
    return false;
}

/// One damped Newton run from a fixed start; branch-checked against it.
MechanismState newton_solve(const Vec8& x0, const FingerPose& pose, const Geometry& geom,
                            const SolverSettings& settings) {
    Vec8 x = x0;
    double norm = loop_residuals(MechanismState::from_vector(x), pose, geom)
                      .cwiseAbs()
                      .maxCoeff();
    for (int it = 0; it < settings.max_iter && norm >= settings.tol_residual; ++it) {
        const Residual8 r = loop_residuals(MechanismState::from_vector(x), pose, geom);
        const Mat8 J = numeric_jacobian(x, pose, geom, settings.fd_step);
        Eigen::FullPivLU<Mat8> lu(J);
        if (!lu.isInvertible()) {
            throw SingularIteration("solve_pose: loop Jacobian rank-deficient at iterate " +
                                    std::to_string(it));
        }
        const Vec8 dx = lu.solve(-r);

        double lambda = settings.damping;
        bool stepped = false;
        for (int ls = 0; ls < 40; ++ls) {
            const Vec8 xn = x + lambda * dx;
            const double nn = loop_residuals(MechanismState::from_vector(xn), pose, geom)
                                  .cwiseAbs()
                                  .maxCoeff();
            if (nn < norm) {
                x = xn;
                norm = nn;
                stepped = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!stepped) {
            throw NoConvergence("solve_pose: line search stalled at residual " +
                                std::to_string(norm));
        }
    }
    if (norm >= settings.tol_residual) {
        throw NoConvergence("solve_pose: iteration budget exhausted at residual " +
                            std::to_string(norm));
    }
    if (branch_escaped(x0, x)) {
        throw NoConvergence("solve_pose: converged onto a different closure branch");
    }
    return MechanismState::from_vector(x);
}

}  // namespace

MechanismState solve_pose(const FingerPose& pose, const Geometry& geom,
                          std::optional<MechanismState> guess,
                          const SolverSettings& settings) {
    geom.validate();
    if (guess) {
        return newton_solve(guess->to_vector(), pose, geom, settings);
    }
    // Cold start from the extension seed: continuation over an anatomical
    // ladder keeps each Newton run inside the working branch.
    const Vec2 target = internal_to_anatomical(pose);
    MechanismState state = geom.extension_seed;
    for (double f : {0.25, 0.5, 0.75, 1.0}) {
        const FingerPose p = anatomical_to_internal(f * target(0), f * target(1));
        state = newton_solve(state.to_vector(), p, geom, settings);
    }
    return state;
}

std::vector<MechanismState> sweep_workspace(const std::vector<FingerPose>& path,
                                            const Geometry& geom,
                                            const SolverSettings& settings) {
    std::vector<MechanismState> out;
    out.reserve(path.size());
    std::optional<MechanismState> warm;
    for (std::size_t i = 0; i < path.size(); ++i) {
        try {
            out.push_back(solve_pose(path[i], geom, warm, settings));
        } catch (const NoConvergence& e) {
            throw NoConvergence(std::string(e.what()) + " (path index " + std::to_string(i) + ")",
                                i);
        } catch (const SingularIteration& e) {
            throw SingularIteration(std::string(e.what()) + " (path index " +
                                    std::to_string(i) + ")");
        }
        warm = out.back();
    }
    return out;
}

LimitReport check_limits(const MechanismState& state, const Anthropometry& anthro,
                         double l_max) {
    LimitReport rep;
    auto bound = [](double v, double lo, double hi, bool& ok, double& margin) {
        margin = std::min(v - lo, hi - v);
        ok = margin >= 0.0;
    };
    bound(state.l_x, 0.0, l_max, rep.lx_ok, rep.lx_margin);
    bound(state.c_1, 0.0, anthro.c1_max, rep.c1_ok, rep.c1_margin);
    bound(state.c_2, 0.0, anthro.c2_max, rep.c2_ok, rep.c2_margin);
    return rep;
}

}  // namespace exosynth

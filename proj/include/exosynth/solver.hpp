#pragma once

#include "exosynth/geometry.hpp"
#include "exosynth/loops.hpp"

#include <optional>
#include <vector>

namespace exosynth {

struct SolverSettings {
    double tol_residual = 1e-10;  // mm, infinity norm
    int max_iter = 50;
    double damping = 1.0;         // initial step scale; halved on uphill steps
    double fd_step = 1e-7;        // central-difference step for the iteration Jacobian
};

/// Newton with a numeric (central-difference) loop Jacobian and
/// residual-halving line search. Deterministic for fixed inputs.
///
/// Without a guess the geometry's extension seed is used. A converged state
/// whose angles moved more than 90 deg from the start is rejected as a
/// branch escape.
///
/// Throws NoConvergence or SingularIteration.
MechanismState solve_pose(const FingerPose& pose, const Geometry& geom,
                          std::optional<MechanismState> guess = std::nullopt,
                          const SolverSettings& settings = {});

/// Warm-started continuation along a pose path (consecutive poses within
/// 5 deg per joint). Solver errors are rethrown with the failing path index.
std::vector<MechanismState> sweep_workspace(const std::vector<FingerPose>& path,
                                            const Geometry& geom,
                                            const SolverSettings& settings = {});

struct LimitReport {
    bool lx_ok = false;
    bool c1_ok = false;
    bool c2_ok = false;
    // distance to the nearest violated bound; >= 0 iff the flag is true
    double lx_margin = 0.0;
    double c1_margin = 0.0;
    double c2_margin = 0.0;

    bool all_ok() const { return lx_ok && c1_ok && c2_ok; }
};

/// Closed-bound checks 0 <= l_x <= l_max, 0 <= c_1 <= c1_max, 0 <= c_2 <= c2_max.
LimitReport check_limits(const MechanismState& state, const Anthropometry& anthro,
                         double l_max);

}  // namespace exosynth

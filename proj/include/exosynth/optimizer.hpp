#pragma once

#include "exosynth/geometry.hpp"
#include "exosynth/solver.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exosynth {

/// Closed integer-mm range, inclusive on both ends.
struct LengthRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count(double step) const;
};

/// Exhaustive search space over the six retained link lengths. Candidate
/// enumeration is lexicographic in the fixed parameter order
/// [L_EJ, L_ED, L_CI, L_EF, L_CD, L_BC], innermost last.
struct SearchSpace {
    LengthRange L_EJ{30, 40};
    LengthRange L_ED{30, 40};
    LengthRange L_CI{16, 20};
    LengthRange L_EF{20, 35};
    LengthRange L_CD{10, 20};
    LengthRange L_BC{36, 46};
    double step = 1.0;  // mm

    std::size_t size() const;
};

inline constexpr std::array<const char*, 6> kSearchParamOrder = {
    "L_EJ", "L_ED", "L_CI", "L_EF", "L_CD", "L_BC"};

/// MCP x PIP sweep grid (deg). Default 9x10 at 10 deg covering the full
/// optimized range of motion.
struct WorkspaceSweepSpec {
    double mcp_max = 80.0;
    double pip_max = 90.0;
    double step = 10.0;

    std::vector<FingerPose> serpentine_path() const;  // continuation-friendly order
    std::size_t pose_count() const;
};

/// Per-candidate evaluation record.
struct CandidateReport {
    std::uint64_t id = 0;                     // lexicographic enumeration index
    std::array<double, 6> lengths{};          // kSearchParamOrder
    bool phase1_pass = false;
    bool phase2_pass = false;
    std::string failure;                      // first violated constraint, with pose
    // per-sweep extrema (valid where the phases that produce them ran)
    double min_lx = 0.0, max_lx = 0.0;
    double min_c1 = 0.0, max_c1 = 0.0;
    double min_c2 = 0.0, max_c2 = 0.0;
    double min_tau1 = 0.0, max_tau1 = 0.0;
    double min_tau2 = 0.0, max_tau2 = 0.0;
    double min_ratio = 0.0, max_ratio = 0.0;
    double p = 0.0;                           // mean over poses of hypot(tau1, tau2), f_ac = 1 N
    double p_min_pose = 0.0;                  // per-pose minimum of the same
    bool feasible() const { return phase1_pass && phase2_pass; }
};

/// Compose a search-space candidate with the frozen lengths and frame
/// constants of the reference geometry.
Geometry compose_candidate(const std::array<double, 6>& lengths, const Geometry& reference);

/// Lexicographic candidate lengths for a given enumeration index.
std::array<double, 6> candidate_lengths(const SearchSpace& space, std::uint64_t id);

/// Deterministic lexicographic enumeration of composed candidate geometries.
void enumerate_grid(const SearchSpace& space, const Geometry& reference,
                    const std::function<void(std::uint64_t, const Geometry&)>& fn);

/// Phase 1: solve every sweep pose (warm-started continuation with local
/// bisection fallback) and require 0 <= l_x <= 50, 0 <= c_1 <= 50,
/// 0 <= c_2 <= 40 mm at each. Solver failure counts as fail.
/// Fills the slider/stroke extrema of the report.
bool prefilter_linear(const Geometry& cand, const WorkspaceSweepSpec& sweep,
                      CandidateReport& report, const SolverSettings& settings = {});

/// Phase 2: at every sweep pose require both torques of one sign and
/// 1 <= tau1/tau2 <= 7.5 at f_ac = 1 N. Fills torque/ratio extrema.
bool prefilter_static(const Geometry& cand, const WorkspaceSweepSpec& sweep,
                      CandidateReport& report, double f_ac = 1.0,
                      const SolverSettings& settings = {});

/// Cost p of a doubly-feasible candidate: mean over the sweep grid of
/// sqrt(tau1^2 + tau2^2) at f_ac = 1 N (per-pose minimum kept alongside).
double cost(const Geometry& cand, const WorkspaceSweepSpec& sweep,
            CandidateReport& report, double f_ac = 1.0,
            const SolverSettings& settings = {});

struct OptimizeResult {
    CandidateReport best;
    std::vector<CandidateReport> feasible;    // ranked: p desc, ties lexicographic
    std::uint64_t n_candidates = 0;
    std::uint64_t n_phase1_pass = 0;
    std::uint64_t n_phase2_pass = 0;
    double phase1_elimination() const;        // fraction of all candidates
    double phase2_elimination() const;        // fraction of phase-1 survivors
};

/// Full exhaustive run. Candidate evaluations run data-parallel over
/// `threads` workers (0 = hardware concurrency; EXOSYNTH_THREADS at the CLI)
/// with a deterministic, order-independent merge: results are identical for
/// any thread count. Throws NoFeasibleCandidate when nothing survives.
OptimizeResult optimize(const SearchSpace& space, const WorkspaceSweepSpec& sweep,
                        const Geometry& reference, unsigned threads = 0,
                        const SolverSettings& settings = {},
                        const std::function<void(std::uint64_t, std::uint64_t)>& progress = {});

}  // namespace exosynth

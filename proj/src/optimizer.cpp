#include "exosynth/optimizer.hpp"

#include "exosynth/errors.hpp"
#include "exosynth/jacobian.hpp"
#include "exosynth/statics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace exosynth {

std::size_t LengthRange::count(double step) const {
    if (hi < lo || !(step > 0.0)) return 0;
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

std::size_t SearchSpace::size() const {
    return L_EJ.count(step) * L_ED.count(step) * L_CI.count(step) * L_EF.count(step) *
           L_CD.count(step) * L_BC.count(step);
}

std::vector<FingerPose> WorkspaceSweepSpec::serpentine_path() const {
    std::vector<FingerPose> path;
    const int n_mcp = static_cast<int>(std::floor(mcp_max / step + 1e-9)) + 1;
    const int n_pip = static_cast<int>(std::floor(pip_max / step + 1e-9)) + 1;
    path.reserve(static_cast<std::size_t>(n_mcp) * n_pip);
    for (int i = 0; i < n_mcp; ++i) {
        for (int k = 0; k < n_pip; ++k) {
            const int j = (i % 2 == 0) ? k : n_pip - 1 - k;
            path.push_back(anatomical_to_internal(i * step, j * step));
        }
    }
    return path;
}

std::size_t WorkspaceSweepSpec::pose_count() const {
    const auto n_mcp = static_cast<std::size_t>(std::floor(mcp_max / step + 1e-9)) + 1;
    const auto n_pip = static_cast<std::size_t>(std::floor(pip_max / step + 1e-9)) + 1;
    return n_mcp * n_pip;
}

std::array<double, 6> candidate_lengths(const SearchSpace& space, std::uint64_t id) {
    const LengthRange* ranges[6] = {&space.L_EJ, &space.L_ED, &space.L_CI,
                                    &space.L_EF, &space.L_CD, &space.L_BC};
    std::size_t counts[6];
    for (int i = 0; i < 6; ++i) counts[i] = ranges[i]->count(space.step);
    std::array<double, 6> lengths{};
    // L_BC is the fastest-varying digit
    for (int i = 5; i >= 0; --i) {
        const std::uint64_t digit = id % counts[i];
        id /= counts[i];
        lengths[i] = ranges[i]->lo + static_cast<double>(digit) * space.step;
    }
    return lengths;
}

Geometry compose_candidate(const std::array<double, 6>& lengths, const Geometry& reference) {
    Geometry g = reference;
    g.L_EJ = lengths[0];
    g.L_ED = lengths[1];
    g.L_CI = lengths[2];
    g.L_EF = lengths[3];
    g.L_CD = lengths[4];
    g.L_BC = lengths[5];
    return g;
}

void enumerate_grid(const SearchSpace& space, const Geometry& reference,
                    const std::function<void(std::uint64_t, const Geometry&)>& fn) {
    const std::uint64_t n = space.size();
    for (std::uint64_t id = 0; id < n; ++id) {
        fn(id, compose_candidate(candidate_lengths(space, id), reference));
    }
}

namespace {

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string pose_label(const FingerPose& pose) {
    const Vec2 a = internal_to_anatomical(pose);
    std::ostringstream os;
    os << "(" << a(0) << "," << a(1) << ")";
    return os.str();
}

/// Solve the candidate's extension pose; falls back to a short geometry
/// homotopy from the reference lengths when the direct Newton run strays.
bool solve_extension(const Geometry& cand, const Geometry& reference,
                     const SolverSettings& settings, MechanismState& out) {
    const FingerPose ext = anatomical_to_internal(0.0, 0.0);
    try {
        out = solve_pose(ext, cand, cand.extension_seed, settings);
        return true;
    } catch (const Error&) {
    }
    MechanismState state = cand.extension_seed;
    for (double f : {0.25, 0.5, 0.75, 1.0}) {
        Geometry mid = cand;
        mid.L_EJ = reference.L_EJ + f * (cand.L_EJ - reference.L_EJ);
        mid.L_ED = reference.L_ED + f * (cand.L_ED - reference.L_ED);
        mid.L_CI = reference.L_CI + f * (cand.L_CI - reference.L_CI);
        mid.L_EF = reference.L_EF + f * (cand.L_EF - reference.L_EF);
        mid.L_CD = reference.L_CD + f * (cand.L_CD - reference.L_CD);
        mid.L_BC = reference.L_BC + f * (cand.L_BC - reference.L_BC);
        try {
            state = solve_pose(ext, mid, state, settings);
        } catch (const Error&) {
            return false;
        }
    }
    out = state;
    return true;
}

/// Warm-started solve at the next sweep node with anatomical bisection on
/// failure. Returns false when the step cannot be carried even at depth 5.
bool continue_to(const FingerPose& target, const Geometry& geom,
                 const SolverSettings& settings, MechanismState& state,
                 const FingerPose& from, int depth = 0) {
    try {
        state = solve_pose(target, geom, state, settings);
        return true;
    } catch (const Error&) {
        if (depth >= 5) return false;
    }
    const Vec2 a0 = internal_to_anatomical(from);
    const Vec2 a1 = internal_to_anatomical(target);
    const FingerPose mid = anatomical_to_internal(0.5 * (a0(0) + a1(0)), 0.5 * (a0(1) + a1(1)));
    if (!continue_to(mid, geom, settings, state, from, depth + 1)) return false;
    return continue_to(target, geom, settings, state, mid, depth + 1);
}

struct SweepFlags {
    bool want_static = true;
    bool want_cost = true;
};

/// Single fused sweep filling a CandidateReport. Phase 1 violations stop the
/// walk (candidate eliminated); a phase-2 violation only clears the flag so
/// the phase-1 verdict stays complete. Stroke is measured from the
/// candidate's own extension calibration.
void sweep_candidate(const Geometry& cand, const Geometry& reference,
                     const WorkspaceSweepSpec& sweep, double f_ac,
                     const SolverSettings& settings, const SweepFlags& flags,
                     CandidateReport& rep) {
    rep.phase1_pass = false;
    rep.phase2_pass = false;
    rep.failure.clear();

    MechanismState state;
    if (!solve_extension(cand, reference, settings, state)) {
        rep.failure = "extension pose failed to close";
        return;
    }
    const double lx0 = state.l_x;

    const auto path = sweep.serpentine_path();
    bool p2 = flags.want_static;
    double p_sum = 0.0;
    double p_min = std::numeric_limits<double>::infinity();
    std::size_t n_cost = 0;

    rep.min_lx = rep.min_c1 = rep.min_c2 = std::numeric_limits<double>::infinity();
    rep.max_lx = rep.max_c1 = rep.max_c2 = -std::numeric_limits<double>::infinity();
    rep.min_tau1 = rep.min_tau2 = rep.min_ratio = std::numeric_limits<double>::infinity();
    rep.max_tau1 = rep.max_tau2 = rep.max_ratio = -std::numeric_limits<double>::infinity();

    FingerPose prev = anatomical_to_internal(0.0, 0.0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && !continue_to(path[i], cand, settings, state, prev)) {
            rep.failure = "closure failed at pose " + pose_label(path[i]);
            return;
        }
        prev = path[i];

        const double lx = state.l_x - lx0;  // stroke from the extension calibration
        rep.min_lx = std::min(rep.min_lx, lx);
        rep.max_lx = std::max(rep.max_lx, lx);
        rep.min_c1 = std::min(rep.min_c1, state.c_1);
        rep.max_c1 = std::max(rep.max_c1, state.c_1);
        rep.min_c2 = std::min(rep.min_c2, state.c_2);
        rep.max_c2 = std::max(rep.max_c2, state.c_2);
        if (lx < 0.0 || lx > 50.0) {
            rep.failure = "l_max exceeded at pose " + pose_label(path[i]);
            return;
        }
        if (state.c_1 < 0.0 || state.c_1 > 50.0) {
            rep.failure = "c1_max exceeded at pose " + pose_label(path[i]);
            return;
        }
        if (state.c_2 < 0.0 || state.c_2 > 40.0) {
            rep.failure = "c2_max exceeded at pose " + pose_label(path[i]);
            return;
        }

        if (p2) {
            try {
                const ReducedJacobian ja = reduced_jacobian(assemble_blocks(state, path[i], cand));
                const JointTorques tau = joint_torques(ja, {f_ac});
                rep.min_tau1 = std::min(rep.min_tau1, tau.tau1);
                rep.max_tau1 = std::max(rep.max_tau1, tau.tau1);
                rep.min_tau2 = std::min(rep.min_tau2, tau.tau2);
                rep.max_tau2 = std::max(rep.max_tau2, tau.tau2);
                if (grasp_stability(tau) != GraspStability::Stable) {
                    p2 = false;
                    if (rep.failure.empty())
                        rep.failure = "torque signs differ at pose " + pose_label(path[i]);
                } else {
                    const double ratio = torque_ratio(tau);
                    rep.min_ratio = std::min(rep.min_ratio, ratio);
                    rep.max_ratio = std::max(rep.max_ratio, ratio);
                    if (ratio < 1.0 || ratio > 7.5) {
                        p2 = false;
                        if (rep.failure.empty())
                            rep.failure = "torque ratio " + format_short(ratio) +
                                          " out of band at pose " + pose_label(path[i]);
                    }
                }
                if (flags.want_cost && p2) {
                    const double pp = std::hypot(tau.tau1, tau.tau2) / f_ac;
                    p_sum += pp;
                    p_min = std::min(p_min, pp);
                    ++n_cost;
                }
            } catch (const Error& e) {
                p2 = false;
                if (rep.failure.empty())
                    rep.failure = std::string("statics failed at pose ") + pose_label(path[i]) +
                                  ": " + e.what();
            }
        }
    }

    rep.phase1_pass = true;  // every pose closed inside bounds
    rep.phase2_pass = flags.want_static && p2;
    if (rep.phase2_pass && flags.want_cost && n_cost == path.size()) {
        rep.p = p_sum / static_cast<double>(n_cost);
        rep.p_min_pose = p_min;
    }
}

}  // namespace

bool prefilter_linear(const Geometry& cand, const WorkspaceSweepSpec& sweep,
                      CandidateReport& report, const SolverSettings& settings) {
    sweep_candidate(cand, cand, sweep, 1.0, settings, {false, false}, report);
    return report.phase1_pass;
}

bool prefilter_static(const Geometry& cand, const WorkspaceSweepSpec& sweep,
                      CandidateReport& report, double f_ac, const SolverSettings& settings) {
    sweep_candidate(cand, cand, sweep, f_ac, settings, {true, false}, report);
    return report.phase2_pass;
}

double cost(const Geometry& cand, const WorkspaceSweepSpec& sweep, CandidateReport& report,
            double f_ac, const SolverSettings& settings) {
    sweep_candidate(cand, cand, sweep, f_ac, settings, {true, true}, report);
    if (!report.feasible()) {
        throw NoFeasibleCandidate("cost: candidate does not pass both filters");
    }
    return report.p;
}

double OptimizeResult::phase1_elimination() const {
    if (n_candidates == 0) return 0.0;
    return 1.0 - static_cast<double>(n_phase1_pass) / static_cast<double>(n_candidates);
}

double OptimizeResult::phase2_elimination() const {
    if (n_phase1_pass == 0) return 0.0;
    return 1.0 - static_cast<double>(n_phase2_pass) / static_cast<double>(n_phase1_pass);
}

OptimizeResult optimize(const SearchSpace& space, const WorkspaceSweepSpec& sweep,
                        const Geometry& reference, unsigned threads,
                        const SolverSettings& settings,
                        const std::function<void(std::uint64_t, std::uint64_t)>& progress) {
    const std::uint64_t n = space.size();
    if (n == 0) throw NoFeasibleCandidate("optimize: empty search space");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));

    std::vector<CandidateReport> reports(n);
    std::atomic<std::uint64_t> done{0};

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t id = lo; id < hi; ++id) {
            CandidateReport& rep = reports[id];
            rep.id = id;
            rep.lengths = candidate_lengths(space, id);
            const Geometry cand = compose_candidate(rep.lengths, reference);
            sweep_candidate(cand, reference, sweep, 1.0, settings, {true, true}, rep);
            const std::uint64_t d = ++done;
            if (progress && d % 1024 == 0) progress(d, n);
        }
    };

    if (threads <= 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::uint64_t block = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * block;
            const std::uint64_t hi = std::min<std::uint64_t>(n, lo + block);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (progress) progress(n, n);

    OptimizeResult result;
    result.n_candidates = n;
    for (const auto& rep : reports) {
        if (rep.phase1_pass) ++result.n_phase1_pass;
        if (rep.feasible()) {
            ++result.n_phase2_pass;
            result.feasible.push_back(rep);
        }
    }
    if (result.feasible.empty()) {
        throw NoFeasibleCandidate("optimize: both filters eliminated every candidate");
    }
    std::sort(result.feasible.begin(), result.feasible.end(),
              [](const CandidateReport& a, const CandidateReport& b) {
                  if (a.p != b.p) return a.p > b.p;
                  return a.lengths < b.lengths;
              });
    result.best = result.feasible.front();
    return result;
}

}  // namespace exosynth

#pragma once

#include "exosynth/geometry.hpp"
#include "exosynth/solver.hpp"
#include "exosynth/statics.hpp"

#include <vector>

namespace exosynth {

/// Convex planar object in the finger plane, MCP at the origin.
/// Either a disc or a convex polygon (counter-clockwise vertices).
struct ObjectShape {
    enum class Kind { Disc, Polygon } kind = Kind::Disc;
    Vec2 center{0.0, 0.0};          // disc
    double radius = 0.0;            // disc
    std::vector<Vec2> vertices;     // polygon, CCW

    static ObjectShape disc(const Vec2& center, double radius);
    static ObjectShape polygon(std::vector<Vec2> vertices);
    void validate() const;
};

/// Torsional spring model of the finger's own impedance.
struct FingerImpedance {
    double k1 = 50.0;               // N*mm/rad at MCP
    double k2 = 50.0;               // N*mm/rad at PIP
    double rest_mcp_deg = 0.0;      // rest pose, anatomical degrees
    double rest_pip_deg = 0.0;
};

/// Penalty contact stiffness (N/mm per contact).
inline constexpr double kContactStiffness = 100.0;

/// Per-phalange signed gap to the object (mm, positive = separated) and the
/// contact normal (unit, from object toward the phalange) at the closest point.
struct ContactState {
    double gap_proximal = 0.0;
    double gap_intermediate = 0.0;
    bool proximal_in_contact = false;
    bool intermediate_in_contact = false;
};

/// Phalange segments for a pose: proximal MCP->PIP, intermediate PIP->tip
/// (zero thickness, lengths l_ML and l_p2).
struct PhalangeSegments {
    Vec2 mcp, pip, tip;
};
PhalangeSegments phalange_segments(const FingerPose& pose, const Anthropometry& anthro);

/// Signed gap between each phalange segment and the object; contact iff
/// gap <= 1e-6 mm.
ContactState detect_contact(const FingerPose& pose, const Anthropometry& anthro,
                            const ObjectShape& object);

/// Quasi-static equilibrium at a driven stroke: the pose on the
/// closure-feasible curve l_x(pose) = l_x that minimizes torsional spring
/// energy plus the quadratic penetration penalty, descended from the warm
/// start. Contact forces read from the penalty gradient, clamped >= 0.
/// Throws NoEquilibrium when the descent fails to settle.
struct EquilibriumResult {
    FingerPose pose;
    double force_proximal = 0.0;     // N, normal to the phalange
    double force_intermediate = 0.0;
    double energy = 0.0;
};
EquilibriumResult equilibrium_step(double l_x, const ObjectShape& object,
                                   const FingerImpedance& impedance,
                                   const Geometry& geom, const Anthropometry& anthro,
                                   const FingerPose& warm_start,
                                   const SolverSettings& settings = {});

/// One row per schedule step.
struct GraspTraceRow {
    double l_x = 0.0;
    double theta_mcp_deg = 0.0;
    double theta_pip_deg = 0.0;
    double force_proximal = 0.0;
    double force_intermediate = 0.0;
};

struct GraspTrace {
    std::vector<GraspTraceRow> rows;
    GraspStability final_stability = GraspStability::Indeterminate;
};

/// Steps equilibrium_step along the stroke schedule with warm starts.
/// The schedule must start at the extension calibration (l_x near 0).
/// Throws NoEquilibrium tagged with the failing step index.
GraspTrace simulate_grasp(const Geometry& geom, const Anthropometry& anthro,
                          const FingerImpedance& impedance, const ObjectShape& object,
                          const std::vector<double>& schedule,
                          const SolverSettings& settings = {});

}  // namespace exosynth

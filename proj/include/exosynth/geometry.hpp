#pragma once

#include "exosynth/errors.hpp"
#include "exosynth/types.hpp"

namespace exosynth {

/// Base-frame orientation of the proximal phalange direction vectors (q_o1)
/// at full extension. Flexion rotates the finger downward: q_o1 decreases by
/// theta_MCP from this value. The 175 deg placement keeps both phalange
/// direction angles strictly inside (0, 180) deg over the MCP 0-80 /
/// PIP 0-90 workspace, away from the sin(q_o) = 0 degeneracies of the
/// constraint-block partition.
inline constexpr double kExtensionQo1 = deg_to_rad(175.0);

/// Which angle Loop 4's final D->B term rotates with. The printed equations
/// use q_K, which also collects the B->H and H->G terms of the same loop;
/// with all composites positive that collapses Loop 4 to an unsatisfiable
/// triangle over the whole design range (l_BH + l_HG alone exceeds
/// l_GF + l_FD + l_DB). The corrected reading rotates D->B with q_B, the
/// angle of the link that carries both B and D, and is the one the
/// reference geometry closes with.
enum class DbAngle { as_printed_qK, corrected_qB };

/// Absolute base-frame orientations of the two driven phalanges (rad).
struct FingerPose {
    double q_o1 = kExtensionQo1;
    double q_o2 = kExtensionQo1;
};

/// Anatomical (relative, flexion-positive, degrees) -> internal absolute angles.
/// q_o1 = q_o1_ref - theta_MCP, q_o2 = q_o1 - theta_PIP.
FingerPose anatomical_to_internal(double theta_mcp_deg, double theta_pip_deg);

/// Inverse of anatomical_to_internal; returns {theta_MCP_deg, theta_PIP_deg}.
Vec2 internal_to_anatomical(const FingerPose& pose);

/// True iff the pose maps into the natural finger range of motion
/// (MCP 0-85 deg, PIP 0-100 deg).
bool within_natural_rom(const FingerPose& pose);

/// The 8 closure unknowns. Vector order is fixed:
/// [l_x, c_1, c_2, q_B, q_D, q_G, q_K, q_N]
/// (mm, mm, mm, rad, rad, rad, rad, rad).
struct MechanismState {
    double l_x = 0.0;
    double c_1 = 0.0;
    double c_2 = 0.0;
    double q_B = 0.0;
    double q_D = 0.0;
    double q_G = 0.0;
    double q_K = 0.0;
    double q_N = 0.0;

    Vec8 to_vector() const;
    static MechanismState from_vector(const Vec8& v);
};

/// x/y components of Loops 1-4 in the fixed order
/// [L1x, L1y, L2x, L2y, L3x, L3y, L4x, L4y] (mm).
using Residual8 = Vec8;

/// All constant lengths and frame constants of one finger mechanism.
/// Primitive lengths and frame lengths in mm, frame angles in rad.
struct Geometry {
    // primitive segment lengths
    double L_AB = 0.0;
    double L_BC = 0.0;
    double L_CD = 0.0;
    double L_CI = 0.0;
    double L_ED = 0.0;
    double L_EF = 0.0;
    double L_EJ = 0.0;
    double L_KB = 0.0;
    double L_KH = 0.0;
    double L_GH = 0.0;
    double L_GF = 0.0;

    // frame constants
    double l_act = 0.0;
    double l_KN = 0.0;
    double q_KN = 0.0;
    double l_LK = 0.0;
    double q_LK = 0.0;

    /// Wearer's proximal phalange length (mm). The finger is part of the
    /// kinematic chain, so its first segment enters Loop 3 as a constant.
    /// Must agree with the Anthropometry in use.
    double l_ML = 50.0;

    // composite sign conventions
    int s_BD = +1;
    int s_BH = -1;
    int s_FD = +1;

    DbAngle db_angle = DbAngle::corrected_qB;

    /// Warm-start state for the extension pose; solve_pose falls back to it
    /// when no guess is supplied.
    MechanismState extension_seed;

    /// Throws ConfigError on non-positive primitive lengths or invalid signs.
    void validate() const;
};

/// Derived collinear-composite segment lengths (mm).
struct DerivedSegments {
    double l_BD = 0.0;  // L_BC + s_BD * L_CD
    double l_BH = 0.0;  // L_KH + s_BH * L_KB
    double l_HG = 0.0;  // L_GH
    double l_FD = 0.0;  // L_ED + s_FD * L_EF
    double l_AD = 0.0;  // L_AB + l_BD; listed with the vector table, unused by the loops
};

/// Composite lengths used by the loop equations.
/// Throws NonPositiveComposite if any derived length <= 0.
DerivedSegments composite_lengths(const Geometry& geom);

/// Phalange lengths and slider travel limits (mm).
struct Anthropometry {
    double l_ML = 50.0;    // proximal phalange, MCP->PIP
    double l_p2 = 30.0;    // intermediate phalange usable length
    double c1_max = 50.0;
    double c2_max = 40.0;

    void validate() const;
};

/// Hand-size presets. Medium is the published design point (50/30 mm);
/// small and big are the 45/27 and 55/34 mm variants. Slider limits scale
/// with the phalanges: c1_max = l_ML, c2_max = l_p2 + 10.
Anthropometry anthropometry_small();
Anthropometry anthropometry_medium();
Anthropometry anthropometry_big();

}  // namespace exosynth

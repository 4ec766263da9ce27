#pragma once

#include "exosynth/solver.hpp"

#include <array>
#include <string>
#include <vector>

namespace exosynth {

/// One-at-a-time sensitivity record for a single primitive length.
///
///   SI = ((S2 - S1)/S_av) / ((E2 - E1)/E_av)
///   SI_g = sign(SI_c1) sign(SI_c2) sqrt(SI_c1^2 + SI_c2^2)
struct SensitivityRecord {
    std::string parameter;
    double E1 = 0.0, E2 = 0.0;        // (1 -/+ delta) * L, mm
    double S1_c1 = 0.0, S2_c1 = 0.0;  // slider c_1 at the two perturbed inputs
    double S1_c2 = 0.0, S2_c2 = 0.0;
    double SI_c1 = 0.0;
    double SI_c2 = 0.0;
    double SI_g = 0.0;
    bool failed = false;              // set by rank_parameters on per-parameter failure
    std::string failure;
};

/// Names of the 11 perturbable primitive lengths, in Geometry declaration order.
const std::array<std::string, 11>& primitive_length_names();

/// Perturb one primitive length by +/-delta and compare the slider
/// displacements c_1, c_2 from the pose solution at the study pose.
/// Throws UnsolvablePerturbation if a perturbed geometry fails to close,
/// and ConfigError for an unknown parameter or delta <= 0.
SensitivityRecord oat_sensitivity(const Geometry& geom, const std::string& parameter,
                                  const FingerPose& pose, double delta);

struct SensitivityRanking {
    std::vector<SensitivityRecord> records;    // sorted by SI_g descending
    std::vector<std::string> retained;         // SI_g > 0.1
    std::vector<std::string> frozen;           // the rest
};

/// OAT study over all 11 primitive lengths at the given pose.
/// Per-parameter failures are recorded in the report, not fatal.
SensitivityRanking rank_parameters(const Geometry& geom, const FingerPose& pose,
                                   double delta = 0.10);

/// Default representative pose of the study: mid-workspace (40, 45) deg.
FingerPose representative_pose();

}  // namespace exosynth

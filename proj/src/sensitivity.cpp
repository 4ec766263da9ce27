#include "exosynth/sensitivity.hpp"

#include "exosynth/errors.hpp"

#include <algorithm>
#include <cmath>

namespace exosynth {

const std::array<std::string, 11>& primitive_length_names() {
    static const std::array<std::string, 11> names = {
        "L_AB", "L_BC", "L_CD", "L_CI", "L_ED", "L_EF",
        "L_EJ", "L_KB", "L_KH", "L_GH", "L_GF"};
    return names;
}

namespace {

double* length_field(Geometry& g, const std::string& name) {
    if (name == "L_AB") return &g.L_AB;
    if (name == "L_BC") return &g.L_BC;
    if (name == "L_CD") return &g.L_CD;
    if (name == "L_CI") return &g.L_CI;
    if (name == "L_ED") return &g.L_ED;
    if (name == "L_EF") return &g.L_EF;
    if (name == "L_EJ") return &g.L_EJ;
    if (name == "L_KB") return &g.L_KB;
    if (name == "L_KH") return &g.L_KH;
    if (name == "L_GH") return &g.L_GH;
    if (name == "L_GF") return &g.L_GF;
    return nullptr;
}

/// Eq.-form sensitivity index: relative output change over relative input change.
double sensitivity_index(double S1, double S2, double E1, double E2) {
    const double S_av = 0.5 * (S1 + S2);
    const double E_av = 0.5 * (E1 + E2);
    return ((S2 - S1) / S_av) / ((E2 - E1) / E_av);
}

}  // namespace

FingerPose representative_pose() { return anatomical_to_internal(40.0, 45.0); }

SensitivityRecord oat_sensitivity(const Geometry& geom, const std::string& parameter,
                                  const FingerPose& pose, double delta) {
    if (!(delta > 0.0)) {
        throw ConfigError("oat_sensitivity: delta must be > 0");
    }
    Geometry probe = geom;
    double* field = length_field(probe, parameter);
    if (field == nullptr) {
        throw ConfigError("oat_sensitivity: unknown primitive length '" + parameter + "'");
    }
    const double L0 = *field;

    SensitivityRecord rec;
    rec.parameter = parameter;
    rec.E1 = (1.0 - delta) * L0;
    rec.E2 = (1.0 + delta) * L0;

    double c1[2], c2[2];
    const double scales[2] = {1.0 - delta, 1.0 + delta};
    for (int i = 0; i < 2; ++i) {
        *field = scales[i] * L0;
        try {
            const MechanismState s = solve_pose(pose, probe);
            c1[i] = s.c_1;
            c2[i] = s.c_2;
        } catch (const Error& e) {
            throw UnsolvablePerturbation("oat_sensitivity: " + parameter + " * " +
                                         std::to_string(scales[i]) +
                                         " failed to close: " + e.what());
        }
    }
    rec.S1_c1 = c1[0];
    rec.S2_c1 = c1[1];
    rec.S1_c2 = c2[0];
    rec.S2_c2 = c2[1];
    rec.SI_c1 = sensitivity_index(c1[0], c1[1], rec.E1, rec.E2);
    rec.SI_c2 = sensitivity_index(c2[0], c2[1], rec.E1, rec.E2);
    const double sgn = (rec.SI_c1 >= 0 ? 1.0 : -1.0) * (rec.SI_c2 >= 0 ? 1.0 : -1.0);
    rec.SI_g = sgn * std::hypot(rec.SI_c1, rec.SI_c2);
    return rec;
}

SensitivityRanking rank_parameters(const Geometry& geom, const FingerPose& pose,
                                   double delta) {
    SensitivityRanking ranking;
    for (const auto& name : primitive_length_names()) {
        try {
            ranking.records.push_back(oat_sensitivity(geom, name, pose, delta));
        } catch (const Error& e) {
            SensitivityRecord rec;
            rec.parameter = name;
            rec.failed = true;
            rec.failure = e.what();
            ranking.records.push_back(rec);
        }
    }
    std::sort(ranking.records.begin(), ranking.records.end(),
              [](const SensitivityRecord& a, const SensitivityRecord& b) {
                  if (a.failed != b.failed) return !a.failed;
                  if (a.SI_g != b.SI_g) return a.SI_g > b.SI_g;
                  return a.parameter < b.parameter;
              });
    for (const auto& rec : ranking.records) {
        if (!rec.failed && rec.SI_g > 0.1) {
            ranking.retained.push_back(rec.parameter);
        } else {
            ranking.frozen.push_back(rec.parameter);
        }
    }
    return ranking;
}

}  // namespace exosynth

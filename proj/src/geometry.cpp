#include "exosynth/geometry.hpp"

#include <string>

namespace exosynth {

FingerPose anatomical_to_internal(double theta_mcp_deg, double theta_pip_deg) {
    FingerPose pose;
    pose.q_o1 = kExtensionQo1 - deg_to_rad(theta_mcp_deg);
    pose.q_o2 = pose.q_o1 - deg_to_rad(theta_pip_deg);
    return pose;
}

Vec2 internal_to_anatomical(const FingerPose& pose) {
    return {rad_to_deg(kExtensionQo1 - pose.q_o1), rad_to_deg(pose.q_o1 - pose.q_o2)};
}

bool within_natural_rom(const FingerPose& pose) {
    const Vec2 a = internal_to_anatomical(pose);
    return a(0) >= 0.0 && a(0) <= 85.0 && a(1) >= 0.0 && a(1) <= 100.0;
}

Vec8 MechanismState::to_vector() const {
    Vec8 v;
    v << l_x, c_1, c_2, q_B, q_D, q_G, q_K, q_N;
    return v;
}

MechanismState MechanismState::from_vector(const Vec8& v) {
    return {v(0), v(1), v(2), v(3), v(4), v(5), v(6), v(7)};
}

void Geometry::validate() const {
    const struct {
        const char* name;
        double value;
    } lengths[] = {
        {"L_AB", L_AB}, {"L_BC", L_BC}, {"L_CD", L_CD}, {"L_CI", L_CI},
        {"L_ED", L_ED}, {"L_EF", L_EF}, {"L_EJ", L_EJ}, {"L_KB", L_KB},
        {"L_KH", L_KH}, {"L_GH", L_GH}, {"L_GF", L_GF}, {"l_ML", l_ML},
    };
    for (const auto& l : lengths) {
        if (!(l.value > 0.0)) {
            throw ConfigError(std::string("geometry: ") + l.name + " must be > 0");
        }
    }
    for (int s : {s_BD, s_BH, s_FD}) {
        if (s != 1 && s != -1) {
            throw ConfigError("geometry: composite signs must be +1 or -1");
        }
    }
    composite_lengths(*this);  // throws NonPositiveComposite on a bad sign set
}

DerivedSegments composite_lengths(const Geometry& geom) {
    DerivedSegments d;
    d.l_BD = geom.L_BC + geom.s_BD * geom.L_CD;
    d.l_BH = geom.L_KH + geom.s_BH * geom.L_KB;
    d.l_HG = geom.L_GH;
    d.l_FD = geom.L_ED + geom.s_FD * geom.L_EF;
    const struct {
        const char* name;
        double value;
    } checks[] = {{"l_BD", d.l_BD}, {"l_BH", d.l_BH}, {"l_HG", d.l_HG}, {"l_FD", d.l_FD}};
    for (const auto& c : checks) {
        if (!(c.value > 0.0)) {
            throw NonPositiveComposite(std::string("composite ") + c.name + " <= 0");
        }
    }
    d.l_AD = geom.L_AB + d.l_BD;
    return d;
}

void Anthropometry::validate() const {
    if (!(l_ML > 0.0) || !(l_p2 > 0.0)) {
        throw ConfigError("anthropometry: phalange lengths must be > 0");
    }
    if (!(c1_max > 0.0) || !(c2_max > 0.0)) {
        throw ConfigError("anthropometry: slider limits must be > 0");
    }
}

Anthropometry anthropometry_small() { return {45.0, 27.0, 45.0, 37.0}; }
Anthropometry anthropometry_medium() { return {50.0, 30.0, 50.0, 40.0}; }
Anthropometry anthropometry_big() { return {55.0, 34.0, 55.0, 44.0}; }

}  // namespace exosynth

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace exosynth {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector8 = Eigen::Matrix<Scalar, 8, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

using Vec2 = Vector2<double>;
using Vec8 = Vector8<double>;
using Mat2 = Matrix2<double>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat62 = Eigen::Matrix<double, 6, 2>;
using Mat26 = Eigen::Matrix<double, 2, 6>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat82 = Eigen::Matrix<double, 8, 2>;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Unit vector at angle t, i.e. the planar exponential e^{it}.
template <typename Scalar>
Vector2<Scalar> unit(Scalar t) {
    return {std::cos(t), std::sin(t)};
}

/// Derivative of unit(t) with respect to t.
template <typename Scalar>
Vector2<Scalar> unit_deriv(Scalar t) {
    return {-std::sin(t), std::cos(t)};
}

}  // namespace exosynth

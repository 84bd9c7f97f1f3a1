// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace v2x {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Cx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Wraps an angle to [-pi, pi).
inline double wrap_angle(double a)
{
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a < 0.0)
        a += 2.0 * kPi;
    return a - kPi;
}

// Oriented box: yaw about z, half extents strictly positive.
struct Cuboid
{
    Vec3 center{0, 0, 0};
    Vec3 half_extents{1, 1, 1};
    double yaw = 0.0;
};

// BS / area index, 1-based as in the four-corner deployment.
struct AreaId
{
    int value = 1; // in {1,2,3,4}
};

} // namespace v2x

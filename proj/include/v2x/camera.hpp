// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include "v2x/types.hpp"

#include <stdexcept>
#include <vector>

namespace v2x {

struct CameraExtrinsics
{
    Vec3 location{0, 0, 4};
    double pitch_deg = -30.0;
    double yaw_deg = 0.0;
    double roll_deg = 0.0;
};

struct CameraIntrinsics
{
    double fx = 60.0; // focal length over pixel pitch
    double fy = 60.0;
    double u0 = 60.0;
    double v0 = 40.0;
    int width = 120;
    int height = 80;

    static CameraIntrinsics from_fov(int width, int height, double hfov_deg);
};

struct PixelCoord
{
    double u = 0;
    double v = 0;
    double depth = 0; // camera-frame Z_c, meters
};

struct BehindCameraError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct DegenerateGeometryError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Product R_x(phi_x) * R_y(phi_y) * R_z(phi_z) of the three printed factor
/// matrices; angles in degrees. Always orthonormal with determinant +1.
Mat3 rotation_matrix(double phi_x_deg, double phi_y_deg, double phi_z_deg);

/// Inverse of rotation_matrix: recovers (phi_x, phi_y, phi_z) in degrees
/// such that rotation_matrix(...) reproduces R.
Vec3 euler_from_rotation(const Mat3 &R);

/// World->camera rotation for a pose given as pitch/yaw/roll. Yaw aims the
/// optical axis in the horizontal plane, pitch tilts it (negative = down),
/// roll spins about it. The result is realized through rotation_matrix so
/// the printed parameterization is the one actually used end to end.
Mat3 world_to_camera_rotation(const CameraExtrinsics &ext);

struct Observation
{
    CameraExtrinsics ext;
    CameraIntrinsics intr;
    PixelCoord pixel;
};

struct TriangulationResult
{
    Vec3 point{0, 0, 0};
    double residual = 0;  // RMS of the stacked linear system
    double condition = 0; // singular value ratio of the design matrix
};

PixelCoord world_to_pixel(const CameraExtrinsics &ext, const CameraIntrinsics &intr, const Vec3 &p);

/// Linear least-squares intersection of >=2 viewing rays (the inverse of
/// the projection chain). Throws DegenerateGeometryError when the design
/// matrix conditioning exceeds cond_limit (near-parallel rays).
TriangulationResult triangulate(const std::vector<Observation> &observations, double cond_limit = 1e8);

} // namespace v2x

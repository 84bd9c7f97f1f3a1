// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#include "v2x/camera.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace v2x {

namespace {
constexpr double kDeg = kPi / 180.0;
}

CameraIntrinsics CameraIntrinsics::from_fov(int width, int height, double hfov_deg)
{
    CameraIntrinsics k;
    k.width = width;
    k.height = height;
    k.fx = 0.5 * width / std::tan(0.5 * hfov_deg * kDeg);
    k.fy = k.fx; // square pixels
    k.u0 = 0.5 * width;
    k.v0 = 0.5 * height;
    return k;
}

Mat3 rotation_matrix(double phi_x_deg, double phi_y_deg, double phi_z_deg)
{
    const double ax = phi_x_deg * kDeg, ay = phi_y_deg * kDeg, az = phi_z_deg * kDeg;
    Mat3 rx, ry, rz;
    rx << std::cos(ax), -std::sin(ax), 0, //
        std::sin(ax), std::cos(ax), 0,    //
        0, 0, 1;
    ry << 1, 0, 0,                        //
        0, std::cos(ay), std::sin(ay),    //
        0, -std::sin(ay), std::cos(ay);
    rz << std::cos(az), 0, -std::sin(az), //
        0, 1, 0,                          //
        std::sin(az), 0, std::cos(az);
    return rx * ry * rz;
}

Vec3 euler_from_rotation(const Mat3 &R)
{
    // rotation_matrix factors as Rz_std(a) * Rx_std(-b) * Ry_std(-g), so
    //   row 3 = (-cos b sin g, -sin b, cos b cos g)
    //   col 2 = (-sin a cos b,  cos a cos b, -sin b)
    const double b = std::asin(std::clamp(-R(2, 1), -1.0, 1.0));
    double a, g;
    if (std::abs(std::cos(b)) > 1e-9)
    {
        g = std::atan2(-R(2, 0), R(2, 2));
        a = std::atan2(-R(0, 1), R(1, 1));
    }
    else
    {
        // Gimbal-locked: fold the remaining freedom into a.
        g = 0.0;
        a = std::atan2(R(1, 0), R(0, 0));
    }
    return Vec3(a / kDeg, b / kDeg, g / kDeg);
}

Mat3 world_to_camera_rotation(const CameraExtrinsics &ext)
{
    const double yaw = ext.yaw_deg * kDeg;
    const double pitch = ext.pitch_deg * kDeg;
    const double roll = ext.roll_deg * kDeg;

    // Optical axis from yaw/pitch; image x is the horizon-right direction,
    // image y completes a right-handed (right, down, forward) frame.
    const Vec3 fwd(std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw), std::sin(pitch));
    const Vec3 right0(std::sin(yaw), -std::cos(yaw), 0.0);
    const Vec3 down0 = fwd.cross(right0);
    const Vec3 right = std::cos(roll) * right0 + std::sin(roll) * down0;
    const Vec3 down = -std::sin(roll) * right0 + std::cos(roll) * down0;

    Mat3 aim;
    aim.row(0) = right;
    aim.row(1) = down;
    aim.row(2) = fwd;

    // Route the pose through the printed rotation parameterization; this is
    // the representation shared by projection and triangulation.
    const Vec3 phi = euler_from_rotation(aim);
    return rotation_matrix(phi.x(), phi.y(), phi.z());
}

PixelCoord world_to_pixel(const CameraExtrinsics &ext, const CameraIntrinsics &intr, const Vec3 &p)
{
    const Mat3 R = world_to_camera_rotation(ext);
    const Vec3 pc = R * (p - ext.location); // T = -R * C
    if (!(pc.z() > 0.0))
        throw BehindCameraError("point is behind the camera (Z_c <= 0)");
    PixelCoord px;
    px.u = intr.fx * (pc.x() / pc.z()) + intr.u0;
    px.v = intr.fy * (pc.y() / pc.z()) + intr.v0;
    px.depth = pc.z();
    return px;
}

TriangulationResult triangulate(const std::vector<Observation> &observations, double cond_limit)
{
    if (observations.size() < 2)
        throw std::invalid_argument("triangulation needs at least 2 observations");

    const int n = static_cast<int>(observations.size());
    Eigen::MatrixXd A(2 * n, 3);
    Eigen::VectorXd rhs(2 * n);
    for (int i = 0; i < n; ++i)
    {
        const auto &ob = observations[i];
        const Mat3 R = world_to_camera_rotation(ob.ext);
        // fx * (R1 . d) = (u - u0) * (R3 . d) with d = p - C, and the same
        // for v; rearranged into rows linear in p.
        const Eigen::RowVector3d r1 = R.row(0), r2 = R.row(1), r3 = R.row(2);
        const Eigen::RowVector3d row_u = (ob.pixel.u - ob.intr.u0) * r3 - ob.intr.fx * r1;
        const Eigen::RowVector3d row_v = (ob.pixel.v - ob.intr.v0) * r3 - ob.intr.fy * r2;
        A.row(2 * i) = row_u;
        A.row(2 * i + 1) = row_v;
        rhs(2 * i) = row_u * ob.ext.location;
        rhs(2 * i + 1) = row_v * ob.ext.location;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    const double cond = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    if (!(cond < cond_limit))
        throw DegenerateGeometryError("triangulation is ill-conditioned (near-parallel rays)");

    TriangulationResult res;
    res.point = svd.solve(rhs);
    res.condition = cond;
    res.residual = std::sqrt((A * res.point - rhs).squaredNorm() / (2.0 * n));
    return res;
}

} // namespace v2x

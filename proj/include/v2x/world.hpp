// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include "v2x/camera.hpp"
#include "v2x/rng.hpp"
#include "v2x/types.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace v2x {

enum class VehicleClass : int
{
    Car = 0,
    Truck = 1,
    Bus = 2,
};

struct VehicleSpec
{
    int id = 0;
    VehicleClass cls = VehicleClass::Car;
    Vec3 dims{4.4, 1.8, 1.5};     // length, width, height
    std::vector<Vec3> waypoints;  // >= 2
    std::vector<double> speeds;   // m/s, one per segment
    int spawn_frame = 0;
};

struct SceneLayout
{
    std::array<Vec3, 4> bs_positions;
    std::array<CameraExtrinsics, 4> cameras;
    double road_half_width_x = 10.95; // road along x: half width in y
    double road_half_width_y = 9.75;  // road along y: half width in x
    std::vector<Cuboid> buildings;
    Vec2 crossroad_min{8.7, -11.1};
    Vec2 crossroad_max{28.2, 10.8};

    Vec2 intersection_center() const { return 0.5 * (crossroad_min + crossroad_max); }
};

struct VehicleState
{
    int id = 0;
    VehicleClass cls = VehicleClass::Car;
    Cuboid pose;
    Vec3 velocity{0, 0, 0};
};

// Immutable per-frame snapshot; safe to share across threads.
struct SceneFrame
{
    int frame_index = 0;
    std::vector<VehicleState> vehicles;
    std::vector<int> active_user_ids; // vehicles inside the crossroad box

    const VehicleState *find(int id) const
    {
        for (const auto &v : vehicles)
            if (v.id == id)
                return &v;
        return nullptr;
    }
};

/// Advances every spawned vehicle along its route to `frame_index` and
/// reports which ones are inside the crossroad. Pure and frame-addressable:
/// the result depends only on (layout, specs, frame_index, delta_t).
SceneFrame step_scene(const SceneLayout &layout, const std::vector<VehicleSpec> &specs, int frame_index,
                      double delta_t);

/// True iff the open segment (p,q) intersects any oriented cuboid.
bool los_blocked(const Vec3 &p, const Vec3 &q, const std::vector<Cuboid> &obstacles);

/// Index (1..4) of the BS nearest to user_loc in the horizontal plane;
/// ties go to the lowest index.
AreaId area_of(const Vec3 &user_loc, const SceneLayout &layout);

/// Default four-corner deployment: camera poses per the reference table,
/// BS antennas co-located with the cameras, one building block per corner.
SceneLayout default_layout();

struct TrafficConfig; // see config.hpp

/// Samples one episode's vehicle routes: straight crossings and L-turns on
/// the lane grid, mixed classes, staggered spawns.
std::vector<VehicleSpec> make_traffic(const SceneLayout &layout, const TrafficConfig &cfg, int frames_per_episode,
                                      Rng &rng);

} // namespace v2x

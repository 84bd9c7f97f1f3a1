// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#include "v2x/world.hpp"

#include "v2x/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace v2x {

namespace {

void validate_spec(const VehicleSpec &s)
{
    if (s.waypoints.size() < 2)
        throw std::invalid_argument("vehicle route needs at least 2 waypoints");
    if (s.speeds.size() != s.waypoints.size() - 1)
        throw std::invalid_argument("vehicle route needs one speed per segment");
    for (double v : s.speeds)
        if (!(v > 0.0))
            throw std::invalid_argument("segment speeds must be positive");
    if (!(s.dims.x() > 0 && s.dims.y() > 0 && s.dims.z() > 0))
        throw std::invalid_argument("vehicle dims must be positive");
    for (size_t i = 0; i + 1 < s.waypoints.size(); ++i)
        if ((s.waypoints[i + 1] - s.waypoints[i]).norm() <= 0.0)
            throw std::invalid_argument("route segments must have nonzero length");
}

// Route position at elapsed seconds, time-parameterized per segment.
// Returns false once the final waypoint has been passed.
bool route_state(const VehicleSpec &s, double elapsed, Vec3 &pos, Vec3 &dir, double &speed)
{
    double t = elapsed;
    for (size_t i = 0; i + 1 < s.waypoints.size(); ++i)
    {
        const Vec3 seg = s.waypoints[i + 1] - s.waypoints[i];
        const double len = seg.norm();
        const double seg_time = len / s.speeds[i];
        if (t <= seg_time)
        {
            const double frac = t / seg_time;
            pos = s.waypoints[i] + frac * seg;
            dir = seg / len;
            speed = s.speeds[i];
            return true;
        }
        t -= seg_time;
    }
    return false;
}

} // namespace

SceneFrame step_scene(const SceneLayout &layout, const std::vector<VehicleSpec> &specs, int frame_index,
                      double delta_t)
{
    if (frame_index < 0)
        throw std::invalid_argument("frame_index must be nonnegative");
    if (!(delta_t > 0.0))
        throw std::invalid_argument("delta_t must be positive");

    SceneFrame frame;
    frame.frame_index = frame_index;

    for (const auto &s : specs)
    {
        validate_spec(s);
        if (frame_index < s.spawn_frame)
            continue;
        const double elapsed = (frame_index - s.spawn_frame) * delta_t;

        Vec3 pos, dir;
        double speed = 0;
        if (!route_state(s, elapsed, pos, dir, speed))
            continue; // past the final waypoint

        VehicleState v;
        v.id = s.id;
        v.cls = s.cls;
        v.pose.center = Vec3(pos.x(), pos.y(), s.dims.z() * 0.5);
        v.pose.half_extents = 0.5 * s.dims;
        v.pose.yaw = wrap_angle(std::atan2(dir.y(), dir.x()));
        v.velocity = dir * speed;
        frame.vehicles.push_back(v);

        const bool inside = pos.x() >= layout.crossroad_min.x() && pos.x() <= layout.crossroad_max.x() &&
                            pos.y() >= layout.crossroad_min.y() && pos.y() <= layout.crossroad_max.y();
        if (inside)
            frame.active_user_ids.push_back(s.id);
    }
    return frame;
}

bool los_blocked(const Vec3 &p, const Vec3 &q, const std::vector<Cuboid> &obstacles)
{
    const Vec3 d = q - p;
    if (d.squaredNorm() == 0.0)
        throw std::invalid_argument("los_blocked endpoints must differ");

    for (const auto &c : obstacles)
    {
        // Slab test in the cuboid's local frame.
        const double cy = std::cos(c.yaw), sy = std::sin(c.yaw);
        const Vec3 rp = p - c.center;
        const Vec3 lp(cy * rp.x() + sy * rp.y(), -sy * rp.x() + cy * rp.y(), rp.z());
        const Vec3 ld(cy * d.x() + sy * d.y(), -sy * d.x() + cy * d.y(), d.z());

        double tmin = 0.0, tmax = 1.0;
        bool miss = false;
        for (int a = 0; a < 3 && !miss; ++a)
        {
            const double h = c.half_extents[a];
            if (std::abs(ld[a]) < 1e-15)
            {
                if (std::abs(lp[a]) > h)
                    miss = true;
                continue;
            }
            double t1 = (-h - lp[a]) / ld[a];
            double t2 = (h - lp[a]) / ld[a];
            if (t1 > t2)
                std::swap(t1, t2);
            tmin = std::max(tmin, t1);
            tmax = std::min(tmax, t2);
            if (tmin > tmax)
                miss = true;
        }
        if (miss)
            continue;
        // Open segment: ignore contacts confined to the endpoints.
        if (tmax > 1e-12 && tmin < 1.0 - 1e-12)
            return true;
    }
    return false;
}

AreaId area_of(const Vec3 &user_loc, const SceneLayout &layout)
{
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int b = 0; b < 4; ++b)
    {
        const Vec2 delta(user_loc.x() - layout.bs_positions[b].x(), user_loc.y() - layout.bs_positions[b].y());
        const double d2 = delta.squaredNorm();
        if (d2 < best_d2)
        {
            best_d2 = d2;
            best = b;
        }
    }
    return AreaId{best + 1};
}

SceneLayout default_layout()
{
    SceneLayout l;
    const double cam_yaw[4] = {-45.0, 45.0, -135.0, 135.0};
    const Vec3 cam_loc[4] = {{8.7, 10.8, 4.0}, {8.7, -11.1, 4.0}, {28.2, 10.8, 4.0}, {28.2, -11.1, 4.0}};
    for (int i = 0; i < 4; ++i)
    {
        l.cameras[i].location = cam_loc[i];
        l.cameras[i].pitch_deg = -30.0;
        l.cameras[i].yaw_deg = cam_yaw[i];
        l.cameras[i].roll_deg = 0.0;
        l.bs_positions[i] = cam_loc[i]; // antenna co-located with the camera
    }
    l.crossroad_min = Vec2(8.7, -11.1);
    l.crossroad_max = Vec2(28.2, 10.8);
    l.road_half_width_x = 10.95;
    l.road_half_width_y = 9.75;

    // One building block per corner quadrant, 2 m back from the road edges.
    const double setback = 2.0;
    const double bx = 14.0, by = 14.0, bh = 12.0; // footprint and height
    const double west = l.crossroad_min.x() - setback - bx * 0.5;
    const double east = l.crossroad_max.x() + setback + bx * 0.5;
    const double south = l.crossroad_min.y() - setback - by * 0.5;
    const double north = l.crossroad_max.y() + setback + by * 0.5;
    for (const auto &[cx, cy] : {std::pair{west, north}, {west, south}, {east, north}, {east, south}})
    {
        Cuboid b;
        b.center = Vec3(cx, cy, bh * 0.5);
        b.half_extents = Vec3(bx * 0.5, by * 0.5, bh * 0.5);
        b.yaw = 0.0;
        l.buildings.push_back(b);
    }
    return l;
}

namespace {

struct LaneSet
{
    // Lane center offsets from the road centerline; right-hand traffic.
    std::array<double, 2> offsets{3.0, 7.5};
};

Vec3 class_dims(VehicleClass cls, Rng &rng)
{
    auto jitter = [&rng](double v) { return v * rng.uniform(0.92, 1.08); };
    switch (cls)
    {
    case VehicleClass::Truck:
        return Vec3(jitter(8.5), jitter(2.5), jitter(3.4));
    case VehicleClass::Bus:
        return Vec3(jitter(12.0), jitter(2.55), jitter(3.1));
    default:
        return Vec3(jitter(4.4), jitter(1.8), jitter(1.5));
    }
}

Vec2 speed_range(VehicleClass cls, const TrafficConfig &cfg)
{
    switch (cls)
    {
    case VehicleClass::Truck:
        return cfg.truck_speed;
    case VehicleClass::Bus:
        return cfg.bus_speed;
    default:
        return cfg.car_speed;
    }
}

} // namespace

std::vector<VehicleSpec> make_traffic(const SceneLayout &layout, const TrafficConfig &cfg, int frames_per_episode,
                                      Rng &rng)
{
    const Vec2 c = layout.intersection_center();
    const LaneSet lanes;
    const double x_lo = layout.crossroad_min.x() - cfg.approach_length;
    const double x_hi = layout.crossroad_max.x() + cfg.approach_length;
    const double y_lo = layout.crossroad_min.y() - cfg.approach_length;
    const double y_hi = layout.crossroad_max.y() + cfg.approach_length;

    std::vector<VehicleSpec> specs;
    specs.reserve(static_cast<size_t>(cfg.vehicles_per_episode));

    for (int i = 0; i < cfg.vehicles_per_episode; ++i)
    {
        VehicleSpec s;
        s.id = i + 1;

        const double uc = rng.uniform();
        s.cls = uc < cfg.car_fraction              ? VehicleClass::Car
                : uc < cfg.car_fraction + cfg.truck_fraction ? VehicleClass::Truck
                                                             : VehicleClass::Bus;
        s.dims = class_dims(s.cls, rng);

        // Entry direction 0..3: +x, -x, +y, -y. Right-hand traffic decides
        // the lane side; a coin decides inner/outer lane.
        const int dir = static_cast<int>(rng.below(4));
        const double lane = lanes.offsets[rng.below(2)];
        const bool turn = rng.uniform() < cfg.turn_probability;

        Vec3 a, b, corner;
        switch (dir)
        {
        case 0: // eastbound, lane below centerline
            a = Vec3(x_lo, c.y() - lane, 0);
            b = Vec3(x_hi, c.y() - lane, 0);
            break;
        case 1: // westbound
            a = Vec3(x_hi, c.y() + lane, 0);
            b = Vec3(x_lo, c.y() + lane, 0);
            break;
        case 2: // northbound, lane right of centerline
            a = Vec3(c.x() + lane, y_lo, 0);
            b = Vec3(c.x() + lane, y_hi, 0);
            break;
        default: // southbound
            a = Vec3(c.x() - lane, y_hi, 0);
            b = Vec3(c.x() - lane, y_lo, 0);
            break;
        }

        if (turn)
        {
            // L-turn onto the crossing road; the exit lane keeps right-hand
            // traffic (+y exit uses x > center, +x exit uses y < center).
            const double exit_lane = lanes.offsets[rng.below(2)];
            const bool left = rng.uniform() < 0.5;
            if (dir == 0 || dir == 1)
            {
                const double exit_y = (dir == 0) == left ? 1.0 : -1.0; // eastbound left turn exits +y
                const double ex = c.x() + exit_y * exit_lane;
                corner = Vec3(ex, a.y(), 0);
                b = Vec3(ex, exit_y > 0 ? y_hi : y_lo, 0);
            }
            else
            {
                const double exit_x = (dir == 2) == left ? -1.0 : 1.0; // northbound left turn exits -x
                const double ey = c.y() - exit_x * exit_lane;
                corner = Vec3(a.x(), ey, 0);
                b = Vec3(exit_x > 0 ? x_hi : x_lo, ey, 0);
            }
            s.waypoints = {a, corner, b};
        }
        else
        {
            s.waypoints = {a, b};
        }

        const Vec2 sr = speed_range(s.cls, cfg);
        s.speeds.resize(s.waypoints.size() - 1);
        for (auto &v : s.speeds)
            v = rng.uniform(sr.x(), sr.y());

        const int spawn_max = std::max(1, static_cast<int>(frames_per_episode * cfg.spawn_window_fraction));
        s.spawn_frame = static_cast<int>(rng.below(static_cast<uint64_t>(spawn_max)));
        specs.push_back(std::move(s));
    }
    return specs;
}

} // namespace v2x

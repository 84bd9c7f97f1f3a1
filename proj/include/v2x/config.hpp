// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include "v2x/types.hpp"
#include "v2x/world.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace v2x {

struct CameraConfig
{
    int width = 120;
    int height = 80;
    double hfov_deg = 90.0;
    double triangulation_cond_limit = 1e8;
};

struct ArrayConfig
{
    int nx = 8, ny = 1, nz = 8;
    double spacing_wavelengths = 0.5;
    int total() const { return nx * ny * nz; }
};

struct ChannelConfig
{
    ArrayConfig tx;               // 8x8 panel at the BS
    ArrayConfig rx{4, 1, 1, 0.5}; // 4x1 on the vehicle roof
    double carrier_ghz = 28.0;
    double bandwidth_mhz = 400.0;
    double reflection_coeff = 0.3;
    int max_paths = 25;
    double label_snr_db = 10.0;
    int down_factor = 8;

    double wavelength() const { return kSpeedOfLight / (carrier_ghz * 1e9); }
    double bandwidth_hz() const { return bandwidth_mhz * 1e6; }
    double label_snr_linear() const { return std::pow(10.0, label_snr_db / 10.0); }
};

// Procedural traffic: per-episode vehicle specs are sampled from these
// ranges. Explicit vehicle specs can also be listed in the config file.
struct TrafficConfig
{
    int vehicles_per_episode = 22;
    double car_fraction = 0.50;
    double truck_fraction = 0.30; // remainder are buses
    double turn_probability = 0.35;
    Vec2 car_speed{7.0, 12.0};
    Vec2 truck_speed{5.0, 9.0};
    Vec2 bus_speed{5.0, 8.0};
    double spawn_window_fraction = 0.65; // spawn frames land in [0, F*fraction]
    double approach_length = 34.0;       // spawn distance beyond the crossroad box
};

struct DatasetConfig
{
    int episodes = 10;
    int frames_per_episode = 150;
    int window = 4; // T
    int max_windows = 4000;
    double split_fraction = 0.7;
    bool use_true_location = false;
};

struct TrainConfig
{
    int pbsn_epochs = 25;
    int bpsn_epochs = 40;
    int batch = 32;
    double lr = 1e-3;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    int threads = 4;
    std::array<double, 4> pbsn_loss_weights{1, 1, 1, 1};
    std::array<double, 2> bpsn_loss_weights{1, 0.5};
    bool full_sequence_features = false; // gate input uses all T hidden states
    bool bpsn_all_views = false;         // feed all four cameras to the BPSN
    bool bpsn_shared = false;            // one BPSN shared by the four BSs
};

struct EvalConfig
{
    std::vector<double> noise_snr_db{0, 5, 10, 15, 20, 25, 30};
    std::vector<double> rate_snr_db{0, 5, 10, 15, 20};
    std::vector<int> topk{1, 2, 3};
};

struct Config
{
    SceneLayout layout;
    double delta_t = 0.1; // seconds per frame
    CameraConfig camera;
    ChannelConfig channel;
    TrafficConfig traffic;
    DatasetConfig dataset;
    TrainConfig train;
    EvalConfig eval;
    // When nonempty these routes replace procedural traffic in every episode.
    std::vector<VehicleSpec> explicit_vehicles;
};

Config default_config();
Config load_config(const std::string &path);
void save_config(const Config &cfg, const std::string &path);

/// Stable hex digest over the full configuration, recorded in manifests.
std::string config_digest(const Config &cfg);

} // namespace v2x

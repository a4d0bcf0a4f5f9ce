// SPDX-License-Identifier: Apache-2.0
//
// Geometric narrowband channel built from traced paths, and labeled datasets.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsense/common.hpp"
#include "twinsense/precoding.hpp"
#include "twinsense/raytrace.hpp"
#include "twinsense/scene.hpp"

namespace twinsense::channel
{

struct ChannelSample
{
    CMatrix h; // N_r x N_t
    int label_tx = 0;
    int label_rx = 0;
    Vec3 user_pos;
    std::string scene_name;
};

struct DatasetMeta
{
    int n_t = 0;
    int n_r = 1;
    double carrier_hz = 0.0;
    int codebook_size = 0;
    std::string scene_name;
    std::string scene_hash;
    std::uint64_t seed = 0;
    std::string split = "all";
    std::size_t grid_users = 0;     // users offered to the tracer
    std::size_t excluded_users = 0; // users dropped for having no paths
};

struct Dataset
{
    DatasetMeta meta;
    std::vector<ChannelSample> samples;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

struct ChannelFactors
{
    CMatrix A_r;  // N_r x L
    CMatrix A_t;  // N_t x L
    CVector alpha; // L
};

// Half-wavelength ULA: a[n] = exp(j*pi*n*cos(angle)) / sqrt(N).
CVector array_response(double angle_rad, int n_antennas);

// H = sum_l alpha_l a_r(aoa_l) a_t(aod_l - boresight)^H.
CMatrix assemble_channel(const std::vector<rt::PropagationPath> &paths, int n_t, int n_r, double bs_boresight_rad);
ChannelFactors assemble_channel_factored(const std::vector<rt::PropagationPath> &paths, int n_t, int n_r,
                                         double bs_boresight_rad);
CMatrix factors_product(const ChannelFactors &f);

// Traces every grid user (or a seeded subsample), assembles and labels channels.
// `threads` = 0 picks the hardware concurrency.
Dataset generate_dataset(const scene::Scene &scene, const rt::RayConfig &cfg, const precoding::Codebook &codebook,
                         std::uint64_t seed, double subsample, int n_r = 1, unsigned threads = 0);

std::pair<Dataset, Dataset> split_dataset(const Dataset &ds, double train_frac, std::uint64_t seed);

// Seeded subset of `count` samples, kept in original order.
Dataset take_subset(const Dataset &ds, std::size_t count, std::uint64_t seed);

// Multiplies every channel by `scale` (labels are unchanged).
void scale_channels(Dataset &ds, double scale);
// Root-mean-square Frobenius norm over the dataset.
double rms_channel_norm(const Dataset &ds);

// JSON-lines file: meta header, then {"pos":[x,y,z],"h":[[re,im],...],"label":k}
// per sample, with h in column-major order.
void save_dataset(const Dataset &ds, const std::filesystem::path &path);
Dataset load_dataset(const std::filesystem::path &path);

nlohmann::json meta_to_json(const DatasetMeta &meta);

} // namespace twinsense::channel

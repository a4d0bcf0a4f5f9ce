// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration behind the `twinsense` command line tool.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsense/channel.hpp"
#include "twinsense/learn.hpp"
#include "twinsense/raytrace.hpp"
#include "twinsense/scene.hpp"

namespace twinsense::harness
{

struct PerturbationEntry
{
    std::string label;
    double building_error_m = 0.0;
    bool drop_foliage = false;
};

struct RefineConfig
{
    int m_t = 8;
    std::string pretrain_source;
    std::vector<double> fractions{0.0, 0.05, 0.1, 0.25, 0.5, 1.0};
    double rehearsal_mix = -1.0;
    int epochs = 50;
    // Target-only baselines on a fraction f train for min(cap, 1/f) times the
    // sweep epochs so that every budget sees a comparable number of steps.
    double baseline_epoch_cap = 4.0;
};

struct PatternConfig
{
    std::string source = "target";
    int m_t = 8;
    int angles_n = 181;
};

struct BaselineConfig
{
    std::vector<int> m_t{1, 2, 4, 8, 16, 32};
    int n_grid = 64;
    int sparsity = 4;
    std::optional<double> snr_db; // empty: noiseless measurements
    double residual_tol = 1e-9;
};

enum class Normalization
{
    None,
    Global,    // every dataset divided by the RMS norm of the target training split
    PerSample, // every channel scaled to unit norm
};

struct ExperimentConfig
{
    std::filesystem::path scene_path;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
    int n_t = 32;
    rt::RayConfig ray;
    std::vector<PerturbationEntry> perturbations;
    double subsample = 1.0;
    double train_frac = 0.8;
    int h1 = 256;
    int h2 = 256;
    learn::TrainConfig train;
    std::vector<int> sweep_m_t{1, 2, 4, 8, 16, 32};
    RefineConfig refine;
    PatternConfig pattern;
    BaselineConfig baseline;
    Normalization normalization = Normalization::PerSample;
    // Rotate each channel so its first nonzero entry is real and positive.
    bool phase_align = false;
    bool csv_wall_time = false;
    bool debug_paths = false;
    unsigned threads = 0;
    nlohmann::json raw; // the parsed file, for the manifest and the config hash

    // Throws ConfigError on invariant violations.
    void validate() const;
    // "target" followed by the perturbation labels, in config order.
    std::vector<std::string> sources() const;
    double error_of(const std::string &source) const;
};

// Relative scene paths resolve against `base_dir`.
ExperimentConfig config_from_json(const nlohmann::json &j, const std::filesystem::path &base_dir);
ExperimentConfig load_config(const std::filesystem::path &path);
std::string config_hash(const ExperimentConfig &cfg);

struct ResultRow
{
    std::string experiment;
    std::string scene;
    double error_m = 0.0;
    int m_t = 0;
    std::size_t n_real = 0;
    double accuracy = 0.0;
    std::optional<double> final_loss;
    double wall_s = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr const char *kResultHeader = "experiment,scene,error_m,m_t,n_real,accuracy,final_loss,wall_s,seed";
inline constexpr const char *kPatternHeader = "angle_deg,vector_idx,gain_db";

void write_results_csv(const std::vector<ResultRow> &rows, const std::filesystem::path &path, bool wall_time);

std::filesystem::path dataset_path(const ExperimentConfig &cfg, const std::string &source, const std::string &split);
std::filesystem::path checkpoint_path(const ExperimentConfig &cfg, const std::string &source, int m_t);

// Loads a split and applies the configured normalization.
channel::Dataset load_split(const ExperimentConfig &cfg, const std::string &source, const std::string &split);

void normalize(channel::Dataset &ds, Normalization mode, double global_scale);

// Removes the common phase of every channel (labels are invariant to it).
void align_phase(channel::Dataset &ds);

// Strongest-path AoD of every sample, in the angle frame of beam_pattern:
// a single-path channel from array angle t equals a_t(pi - t), so the
// encoder sees it at pattern angle pi - t.
std::vector<double> dominant_pattern_angles(const scene::Scene &scene, const rt::RayConfig &ray,
                                            const channel::Dataset &ds);

// Share of integrated linear gain, summed over all columns of P, that falls
// inside [lo, hi] on a uniform grid of `angles_n` points over [0, pi].
double pattern_concentration(const CMatrix &P, double lo, double hi, int angles_n);

// Linear-interpolated percentile, q in [0, 100].
double percentile(std::vector<double> values, double q);

struct RunSummary
{
    std::vector<ResultRow> rows;
    std::filesystem::path csv;
};

void cmd_generate(const ExperimentConfig &cfg);
RunSummary cmd_sweep(const ExperimentConfig &cfg);
RunSummary cmd_refine(const ExperimentConfig &cfg);
std::filesystem::path cmd_pattern(const ExperimentConfig &cfg, const std::optional<std::filesystem::path> &checkpoint,
                                  std::optional<int> angles_n);
RunSummary cmd_baseline(const ExperimentConfig &cfg);

} // namespace twinsense::harness

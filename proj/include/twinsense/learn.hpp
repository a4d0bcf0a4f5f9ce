// SPDX-License-Identifier: Apache-2.0
//
// End-to-end learned sensing: a complex linear encoder (the transmit
// measurement matrix) followed by a sigmoid MLP that predicts the optimal
// RF beam index. Gradients are derived by hand for this fixed architecture.
//
// The encoder is the dense form of a 1D complex convolution whose filters
// have length N_t and stride N_t: for a single-antenna receiver, each
// filter produces exactly one output, y_m = sum_n P[n, m] h[n], so the
// layer is y = P^T h.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsense/channel.hpp"
#include "twinsense/common.hpp"

namespace twinsense::learn
{

struct ModelMeta
{
    int n_t = 0;
    int m_t = 0;
    int h1 = 0;
    int h2 = 0;
    int k = 0;
    std::optional<double> train_snr; // empty: trained noiseless
};

struct PredictorModel
{
    CMatrix P_enc; // N_t x M_t, |entries| = 1/sqrt(N_t)
    RMatrix W1;    // h1 x 2*M_t
    RVector b1;
    RMatrix W2; // h2 x h1
    RVector b2;
    RMatrix W3; // K x h2
    RVector b3;
    ModelMeta meta;

    bool all_finite() const;
};

// Same layout as PredictorModel. dP holds dL/dRe(P) + j dL/dIm(P).
struct Gradients
{
    CMatrix dP;
    RMatrix dW1;
    RVector db1;
    RMatrix dW2;
    RVector db2;
    RMatrix dW3;
    RVector db3;
};

struct AdamState
{
    // Order: Re P, Im P, W1, b1, W2, b2, W3, b3.
    std::vector<RMatrix> m;
    std::vector<RMatrix> v;
    long step = 0;

    static AdamState zeros_like(const PredictorModel &model);
};

struct TrainConfig
{
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps_adam = 1e-8;
    int batch_size = 128;
    int epochs = 200;
    std::uint64_t seed = 0;
    std::optional<double> noise_snr; // linear SNR for measurement noise during training
    double rehearsal_mix = -1.0;     // < 0: |twin| / (|twin| + |real|)

    void validate() const;
};

struct NoiseSpec
{
    double snr = 1.0;
    std::uint64_t seed = 0;
};

struct EpochRecord
{
    int epoch = 0;
    double train_loss = 0.0;
    double val_acc = 0.0;
};

using History = std::vector<EpochRecord>;

struct TrainResult
{
    PredictorModel model;
    History history;
};

PredictorModel init_model(int n_t, int m_t, int h1, int h2, int k, std::uint64_t seed);

CVector encode(const PredictorModel &model, const CVector &h, const std::optional<NoiseSpec> &noise = std::nullopt);

RVector forward(const PredictorModel &model, const CVector &h);
// Column-wise probabilities for a batch of channels (N_t x B).
RMatrix forward_batch(const PredictorModel &model, const CMatrix &channels);

double cross_entropy(const RVector &probs, int label);

// Mean-over-batch gradients of the cross-entropy loss. `channels` is N_t x B.
// When `noise` is given it is added to the encoder output and treated as a
// constant. `loss` receives the mean batch loss when non-null.
Gradients backward(const PredictorModel &model, const CMatrix &channels, std::span<const int> labels,
                   double *loss = nullptr, const CMatrix *noise = nullptr);

// Mean cross-entropy over a batch (used by gradient checks).
double batch_loss(const PredictorModel &model, const CMatrix &channels, std::span<const int> labels);

// Adam with bias correction, then the constant-modulus projection of P_enc.
void adam_step(PredictorModel &model, const Gradients &grads, AdamState &state, const TrainConfig &cfg);

CMatrix project_constant_modulus(const CMatrix &P);

TrainResult train(const PredictorModel &model, const channel::Dataset &train_ds, const channel::Dataset &val_ds,
                  const TrainConfig &cfg);

TrainResult fine_tune_rehearsal(const PredictorModel &model, const channel::Dataset &twin_ds,
                                const channel::Dataset &real_ds, const TrainConfig &cfg,
                                const channel::Dataset *val_ds = nullptr);

double evaluate_accuracy(const PredictorModel &model, const channel::Dataset &ds);

// gain_db(i, m) = 20 log10 |a_t(angles[i])^T p_m|, angles in the array frame.
RMatrix beam_pattern(const CMatrix &P, std::span<const double> angles_rad);

// Stacks sample channels (N_r must be 1) into an N_t x n matrix.
CMatrix channel_matrix(const channel::Dataset &ds);
std::vector<int> labels_of(const channel::Dataset &ds);

nlohmann::json model_to_json(const PredictorModel &model, const std::string &config_hash = {});
PredictorModel model_from_json(const nlohmann::json &j);
void save_checkpoint(const PredictorModel &model, const std::filesystem::path &path,
                     const std::string &config_hash = {});
PredictorModel load_checkpoint(const std::filesystem::path &path);

void write_history_csv(const History &history, const std::filesystem::path &path);

} // namespace twinsense::learn

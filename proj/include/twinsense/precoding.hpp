// SPDX-License-Identifier: Apache-2.0
//
// Codebooks, spectral efficiency and hybrid precoder design. The exhaustive
// RF search here is the labeling oracle for the learned predictor.

#pragma once

#include <string>
#include <vector>

#include "twinsense/common.hpp"

namespace twinsense::precoding
{

struct Codebook
{
    CMatrix vectors; // N x K, one candidate RF vector per column
    std::string kind = "dft";

    Eigen::Index antennas() const { return vectors.rows(); }
    Eigen::Index size() const { return vectors.cols(); }
};

struct HybridDesign
{
    CMatrix F_RF, F_BB, W_RF, W_BB;
    int streams = 1;
    double snr = 1.0;
};

struct BasebandPair
{
    CMatrix F_BB;
    CMatrix W_BB;
};

struct SearchResult
{
    std::vector<int> tx;
    std::vector<int> rx;
    double rate = 0.0;
};

// Column k holds (1/sqrt(N)) * exp(-j*2*pi*n*k/N).
Codebook dft_codebook(int n);

bool has_orthonormal_columns(const CMatrix &m, double tol = 1e-9);

// log2 |I + Qn^-1 W^H H F F^H H^H W| with Qn = W^H W / snr.
double spectral_efficiency(const CMatrix &H, const CMatrix &F, const CMatrix &W, double snr);

// SVD baseband for a fixed RF pair. h_eff = W_RF^H H F_RF.
BasebandPair optimal_baseband(const CMatrix &h_eff, const CMatrix &F_RF, int streams);

// RF-selection objective in closed form, valid for orthonormal RF columns:
// log2 |I + snr W_RF^H H F_RF (F_RF^H F_RF)^-1/2 F_RF^H H^H W_RF|.
double rf_objective_closed_form(const CMatrix &H, const CMatrix &F_RF, const CMatrix &W_RF, double snr);

// Full hybrid design for chosen RF matrices (baseband from optimal_baseband).
HybridDesign design_for_rf(const CMatrix &H, const CMatrix &F_RF, const CMatrix &W_RF, double snr, int streams);

// Exhaustive search over ordered index tuples i1 < i2 < ... of each codebook.
// Ties keep the lexicographically smallest (tx, rx) tuple.
SearchResult exhaustive_search(const CMatrix &H, const Codebook &tx_cb, const Codebook &rx_cb, double snr,
                               int streams, int tx_rf, int rx_rf);

// argmax_k |h^T c_k|, smallest index on ties.
int label_beam(const CVector &h, const Codebook &cb);

} // namespace twinsense::precoding

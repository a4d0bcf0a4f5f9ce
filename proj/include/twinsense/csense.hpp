// SPDX-License-Identifier: Apache-2.0
//
// Classical compressive channel sensing: measurement model, Kronecker
// sensing operator, angular grid dictionary and OMP recovery. vec() is
// column-major everywhere.

#pragma once

#include <cstdint>
#include <vector>

#include "twinsense/common.hpp"

namespace twinsense::csense
{

struct MeasurementMatrix
{
    CMatrix P; // N_t x M_t
    CMatrix Q; // N_r x M_r
    double power = 1.0;
    bool constant_modulus = false;

    // Throws std::invalid_argument on shape or modulus violations.
    void validate() const;
};

struct GridDictionary
{
    CMatrix A_D;       // (N_t*N_r) x (N_grid * N_grid_r)
    int n_grid = 0;    // transmit grid points
    int n_grid_rx = 0; // receive grid points (1 when N_r == 1)
    int n_t = 0;
    int n_r = 0;

    double tx_angle(Eigen::Index column) const;
    double rx_angle(Eigen::Index column) const;
};

struct OmpResult
{
    CVector z;
    std::vector<Eigen::Index> support; // in selection order
    double residual_norm = 0.0;
};

CVector vec(const CMatrix &m);
CMatrix unvec(const CVector &v, Eigen::Index rows, Eigen::Index cols);

// Entries exp(j*omega)/sqrt(N) with omega uniform in [0, 2*pi).
CMatrix random_phase_matrix(int n, int m, std::uint64_t seed);
MeasurementMatrix random_measurement_matrix(int n_t, int m_t, int n_r, int m_r, double power, std::uint64_t seed);

// Y = sqrt(power) Q^H H P + Q^H N, N ~ CN(0, sigma^2) i.i.d.
CMatrix received_measurements(const CMatrix &H, const MeasurementMatrix &mm, double sigma, std::uint64_t seed);

// sqrt(power) (P^T kron Q^H).
CMatrix sensing_operator(const MeasurementMatrix &mm);

// Column (i, j) = conj(a_t(phi_i)) kron a_r(theta_j), phi-major ordering.
// Grid angles are uniform in cosine: phi_i = acos(1 - 2i / n_grid).
GridDictionary grid_dictionary(int n_grid, int n_t, int n_r);

OmpResult omp(const CVector &y, const CMatrix &psi, int max_sparsity, double residual_tol);

CMatrix reconstruct_channel(const CVector &z, const GridDictionary &dict);

// Measure, recover with OMP and reconstruct in one call (the classical baseline).
CMatrix estimate_channel(const CMatrix &H, const MeasurementMatrix &mm, const GridDictionary &dict, double sigma,
                         std::uint64_t seed, int max_sparsity, double residual_tol);

} // namespace twinsense::csense

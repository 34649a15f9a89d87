// Copyright 2026 The spindomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force Liouvillian on the tensor-product collective space.
//
// This path never touches Clebsch–Gordan coefficients or the block equations:
// the collective operators are built from ladder matrix elements in the
// |m_A> ⊗ |m_B> basis, and states are propagated with a dense matrix
// exponential. It exists to check the reduced-space engine independently.

#pragma once

#include <Eigen/Dense>

#include "spindomain/state_space.hpp"

namespace spindomain {

/// Largest tensor-product dimension D = (n_a+1)(n_b+1) the oracle accepts.
inline constexpr Index kOracleMaxDim = 64;

/// Real D^2 x D^2 superoperator acting on column-stacked density matrices:
///   gamma (nbar+1) [2 J rho J^T - J^T J rho - rho J^T J]
/// + gamma nbar     [2 J^T rho J - J J^T rho - rho J J^T],  J = J^-_A ⊗ I + I ⊗ J^-_B.
struct Liouvillian {
    Eigen::MatrixXd matrix;
    double gamma{1.0};
    double nbar{0.0};
    int n_a{0};
    int n_b{0};

    Index state_dim() const noexcept { return static_cast<Index>(n_a + 1) * (n_b + 1); }
};

/// Collective lowering operator on V_A ⊗ V_B (A-major, m descending).
Eigen::MatrixXd collective_lowering(int n_a, int n_b);

/// Throws std::length_error when D exceeds kOracleMaxDim.
Liouvillian build_liouvillian(int n_a, int n_b, double gamma, double nbar);

/// Column stacking: vec(rho)[i + D j] = rho(i, j).
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Index dim);

/// max |L vec(rho)|.
double stationarity_residual(const Liouvillian& l, const DensityMatrix& rho);

/// rho(t) = unvec(exp(L t) vec(rho0)) with t = t~ / gamma.
DensityMatrix evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0, double t_tilde);

/// Propagate a whole list of dimensionless times; entries must be ascending.
Trajectory evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0,
                         const std::vector<double>& t_tilde);

/// Stationary state with residual <= 1e-10.
///
/// The kernel of L is degenerate (collective decay conserves total j), so the
/// limit is taken by long-time evolution from rho0, doubling t~ from 20 up to
/// 200.
/// Throws std::runtime_error with the residual on failure.
DensityMatrix steady_state_oracle(const Liouvillian& l, const DensityMatrix& rho0);

} // namespace spindomain

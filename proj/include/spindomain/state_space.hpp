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

// Basis bookkeeping for the direct-sum and tensor-product
// pictures, the density-matrix container and conversions between the two.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spindomain/angular_momentum.hpp"

namespace spindomain {

using Index = Eigen::Index;

enum class Basis { direct_sum, tensor_product };
enum class Domain { A, B };

std::string to_string(Basis basis);

/// Flat indexing of the direct-sum space V_{j_1} ⊕ ... ⊕ V_{j_{n_b+1}}.
///
/// Block i occupies [offset(i), offset(i) + 2j_i], and within a block the
/// index ascends as m descends from +j_i to -j_i. Indices are 0-based here;
/// user-facing labels add one.
class BlockLayout {
public:
    explicit BlockLayout(DecompositionSpec spec);
    static BlockLayout for_sizes(int n_a, int n_b) { return BlockLayout(decompose(n_a, n_b)); }

    const DecompositionSpec& spec() const noexcept { return spec_; }
    int n_a() const noexcept { return spec_.n_a; }
    int n_b() const noexcept { return spec_.n_b; }
    Index dim() const noexcept { return dim_; }
    Index block_count() const noexcept { return static_cast<Index>(spec_.j_list.size()); }

    HalfInt block_j(Index block) const { return spec_.j_list.at(static_cast<std::size_t>(block)); }
    Index offset(Index block) const { return offsets_.at(static_cast<std::size_t>(block)); }
    Index block_size(Index block) const { return block_j(block).twice() + 1; }

    struct Site {
        Index block;
        HalfInt m;
    };

    /// Flat index of |j_block; m>>. Throws std::out_of_range for |m| > j.
    Index index(Index block, HalfInt m) const;
    Site site(Index flat) const;

private:
    DecompositionSpec spec_;
    std::vector<Index> offsets_;
    Index dim_{0};
};

/// Tensor-product flat index, A-major with m descending: (j_A - m_A)(n_b + 1) + (j_B - m_B).
Index tensor_index(int n_a, int n_b, HalfInt m_a, HalfInt m_b);

/// A dim x dim complex matrix plus the basis it is written in.
struct DensityMatrix {
    Eigen::MatrixXcd data;
    Basis basis{Basis::direct_sum};
    int n_a{0};
    int n_b{0};

    Index dim() const noexcept { return data.rows(); }
    std::complex<double> trace() const { return data.trace(); }
};

/// Hermiticity, trace and positivity measures of a state.
struct StateDiagnostics {
    double hermiticity_error;  // max |rho - rho^dagger|
    double trace_error;        // |Tr rho - 1|
    double min_eigenvalue;
};

StateDiagnostics diagnose(const DensityMatrix& rho);

/// Hermitian to 1e-12, unit trace to 1e-10, min eigenvalue >= -1e-9.
bool is_physical(const DensityMatrix& rho);

/// Time-ordered states sharing one basis; times are dimensionless (gamma t).
class Trajectory {
public:
    /// Throws std::invalid_argument if t does not increase or the basis changes.
    void append(double t_tilde, DensityMatrix state);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<DensityMatrix>& states() const noexcept { return states_; }
    std::size_t size() const noexcept { return times_.size(); }
    bool empty() const noexcept { return times_.empty(); }

    /// Sample whose time lies within tol of t_tilde; throws std::out_of_range otherwise.
    const DensityMatrix& at_time(double t_tilde, double tol = 1e-9) const;

private:
    std::vector<double> times_;
    std::vector<DensityMatrix> states_;
};

/// Change-of-basis matrix U with rho_tp = U rho_ds U^T.
///
/// Column (i, m) holds |j_i; m>> expanded in |m_A> ⊗ |m_B>. The coupling
/// takes domain B as the first angular momentum under the Condon–Shortley
/// phase convention, U(tp(m_A, m_B), ds(i, m)) = <j_B m_B; j_A m_A | j_i m>.
/// U is real orthogonal.
Eigen::MatrixXd coupling_matrix(const BlockLayout& layout);

/// |N_A/2>_A ⊗ |-N_B/2>_B written in the direct-sum basis.
DensityMatrix initial_state(const BlockLayout& layout);

/// The same anti-parallel product state written directly in the tensor-product basis.
DensityMatrix anti_parallel_product_state(int n_a, int n_b);

DensityMatrix to_tensor_product(const DensityMatrix& rho);
DensityMatrix from_tensor_product(const DensityMatrix& rho);

/// Tr(rho J^z_domain); rho must be in the tensor-product basis.
double observable_jz(const DensityMatrix& rho, Domain domain);

/// Sum of the diagonal of each direct-sum block.
std::vector<double> block_weights(const DensityMatrix& rho);

} // namespace spindomain

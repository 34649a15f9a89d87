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

// Partial transpose, trace norm, logarithmic negativity
// and von Neumann entropy.

#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "spindomain/state_space.hpp"

namespace spindomain {

/// A/B split of a tensor-product matrix; index = a * d_b + b.
struct BipartiteDims {
    Index d_a;
    Index d_b;

    static BipartiteDims for_sizes(int n_a, int n_b) { return {n_a + 1, n_b + 1}; }
    Index dim() const noexcept { return d_a * d_b; }
};

/// (rho^{T_A})_{(a,b),(a',b')} = rho_{(a',b),(a,b')}; T_B swaps b and b' instead.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_transpose(const Eigen::MatrixBase<Derived>& rho, BipartiteDims dims, Domain subsystem)
{
    if (rho.rows() != dims.dim() || rho.cols() != dims.dim()) {
        throw std::invalid_argument("partial_transpose: matrix size does not match d_a * d_b");
    }
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rho.rows(),
                                                                                 rho.cols());
    for (Index a = 0; a < dims.d_a; ++a) {
        for (Index ap = 0; ap < dims.d_a; ++ap) {
            // Each (a, a') sub-block is d_b x d_b.
            const auto src_a = (subsystem == Domain::A) ? ap : a;
            const auto src_ap = (subsystem == Domain::A) ? a : ap;
            auto block = rho.block(src_a * dims.d_b, src_ap * dims.d_b, dims.d_b, dims.d_b);
            if (subsystem == Domain::A) {
                out.block(a * dims.d_b, ap * dims.d_b, dims.d_b, dims.d_b) = block;
            } else {
                out.block(a * dims.d_b, ap * dims.d_b, dims.d_b, dims.d_b) = block.transpose();
            }
        }
    }
    return out;
}

/// Largest |M - M^dagger| entry.
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Tr|M| for Hermitian M; throws std::invalid_argument beyond 1e-10 non-Hermiticity.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("trace_norm: matrix not square");
    if (hermiticity_error(m) > 1e-10) {
        throw std::invalid_argument("trace_norm: matrix is not Hermitian");
    }
    using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::SelfAdjointEigenSolver<Plain> solver(Plain(m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

/// log2 ||rho^{T_A}||_1, clamped at zero within 1e-12.
double log_negativity(const Eigen::MatrixXcd& rho, BipartiteDims dims);
double log_negativity(const DensityMatrix& rho);

/// Closed form for the n_b = 1 steady state:
/// log2[(sqrt(4N^3 + (N+1)^2) + N^2 + N) / (N+1)^2].
double negativity_closed_form_nb1(double n_a);

/// -Tr rho log2 rho. Eigenvalues in [-1e-12, 0] count as zero; anything below
/// -1e-8 throws std::domain_error.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// -(1/(N+1)) (log2(1/(N+1)) + N log2(N/(N+1))) for the n_b = 1 steady state.
double entropy_closed_form_nb1(double n_a);

} // namespace spindomain

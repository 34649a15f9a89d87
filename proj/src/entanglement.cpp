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

#include "spindomain/entanglement.hpp"

#include <string>

namespace spindomain {

double log_negativity(const Eigen::MatrixXcd& rho, BipartiteDims dims)
{
    const Eigen::MatrixXcd pt = partial_transpose(rho, dims, Domain::A);
    const double value = std::log2(trace_norm(pt));
    if (value < 0.0 && value > -1e-12) return 0.0;
    return value;
}

double log_negativity(const DensityMatrix& rho)
{
    if (rho.basis != Basis::tensor_product) {
        throw std::invalid_argument("log_negativity expects a tensor_product density matrix");
    }
    return log_negativity(rho.data, BipartiteDims::for_sizes(rho.n_a, rho.n_b));
}

double negativity_closed_form_nb1(double n)
{
    const double np1 = n + 1.0;
    return std::log2((std::sqrt(4.0 * n * n * n + np1 * np1) + n * n + n) / (np1 * np1));
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho)
{
    if (hermiticity_error(rho) > 1e-10) {
        throw std::invalid_argument("von_neumann_entropy: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (const double lambda : solver.eigenvalues()) {
        if (lambda < -1e-8) {
            throw std::domain_error("von_neumann_entropy: negative eigenvalue " +
                                    std::to_string(lambda));
        }
        if (lambda <= 0.0) continue;
        entropy -= lambda * std::log2(lambda);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    return von_neumann_entropy(rho.data);
}

double entropy_closed_form_nb1(double n)
{
    const double np1 = n + 1.0;
    return -(1.0 / np1) * (std::log2(1.0 / np1) + n * std::log2(n / np1));
}

} // namespace spindomain

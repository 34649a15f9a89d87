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

#include "spindomain/steady_state.hpp"

#include <stdexcept>
#include <string>

#include "spindomain/entanglement.hpp"

namespace spindomain {

namespace {

// Weight P_i on |j_i; -j_i>> of every block, zero elsewhere.
DensityMatrix bottom_state(const BlockLayout& layout, const std::vector<double>& weights)
{
    DensityMatrix rho{Eigen::MatrixXcd::Zero(layout.dim(), layout.dim()), Basis::direct_sum,
                      layout.n_a(), layout.n_b()};
    for (Index block = 0; block < layout.block_count(); ++block) {
        const Index bottom = layout.index(block, -layout.block_j(block));
        rho.data(bottom, bottom) = weights[static_cast<std::size_t>(block)];
    }
    return rho;
}

} // namespace

SteadyStateReport analyze_state(const DensityMatrix& rho)
{
    if (rho.basis != Basis::direct_sum) {
        throw std::invalid_argument("analyze_state expects a direct_sum density matrix");
    }
    SteadyStateReport report;
    report.rho_ss = rho;
    report.weights = block_weights(rho);
    const DensityMatrix tp = to_tensor_product(rho);
    report.jz_a = observable_jz(tp, Domain::A);
    report.jz_b = observable_jz(tp, Domain::B);
    report.negativity = log_negativity(tp);
    report.entropy = von_neumann_entropy(rho);
    return report;
}

SteadyStateReport steady_state(const BlockLayout& layout)
{
    const std::vector<double> weights = block_weights(initial_state(layout));
    SteadyStateReport report = analyze_state(bottom_state(layout, weights));
    report.weights = weights;
    return report;
}

double polarization_closed_form(int n_a, int n_b, Domain domain)
{
    if (n_a < n_b || n_a < 1) throw std::domain_error("polarization_closed_form needs n_a >= n_b");
    const double n = n_a;
    if (n_b == 1) {
        const double np1sq = (n + 1.0) * (n + 1.0);
        if (domain == Domain::A) return -(n / 2.0) * (np1sq - 2.0) / np1sq;
        return ((n - 1.0) * (n - 1.0) - 2.0) / (2.0 * np1sq);
    }
    if (n_b == 2) {
        const double denom = n * (n + 1.0) * (n + 2.0) * (n + 2.0);
        if (domain == Domain::A) {
            const double num = n * n * n * n * n + 5.0 * n * n * n * n + 4.0 * n * n * n -
                               16.0 * n * n - 8.0 * n + 16.0;
            return -num / (2.0 * denom);
        }
        return (n * (n + 1.0) * (n * n - 12.0) + 8.0) / denom;
    }
    throw std::invalid_argument("no closed form for n_b=" + std::to_string(n_b) +
                                "; use steady_state + observable_jz");
}

namespace {

double steady_jz_b(int n_a, int n_b)
{
    const BlockLayout layout = BlockLayout::for_sizes(n_a, n_b);
    const auto rho = bottom_state(layout, block_weights(initial_state(layout)));
    return observable_jz(to_tensor_product(rho), Domain::B);
}

} // namespace

int negative_temperature_threshold(int n_b)
{
    if (n_b < 1) throw std::domain_error("negative_temperature_threshold needs n_b >= 1");
    // <J^z_B> tends to n_b/2 as n_a grows, so the scan terminates.
    for (int n_a = n_b;; ++n_a) {
        if (steady_jz_b(n_a, n_b) > 0.0) return n_a;
    }
}

} // namespace spindomain

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

#include "spindomain/state_space.hpp"

#include <cmath>
#include <stdexcept>

namespace spindomain {

namespace {

void require_basis(const DensityMatrix& rho, Basis expected, const char* op)
{
    if (rho.basis != expected) {
        throw std::invalid_argument(std::string(op) + " expects a " + to_string(expected) +
                                    " density matrix, got " + to_string(rho.basis));
    }
}

} // namespace

std::string to_string(Basis basis)
{
    return basis == Basis::direct_sum ? "direct_sum" : "tensor_product";
}

BlockLayout::BlockLayout(DecompositionSpec spec) : spec_(std::move(spec))
{
    offsets_.reserve(spec_.j_list.size());
    for (HalfInt j : spec_.j_list) {
        offsets_.push_back(dim_);
        dim_ += j.twice() + 1;
    }
}

Index BlockLayout::index(Index block, HalfInt m) const
{
    const HalfInt j = block_j(block);
    if (!is_valid_projection(j, m)) {
        throw std::out_of_range("m=" + m.to_string() + " outside block with j=" + j.to_string());
    }
    return offset(block) + (j.twice() - m.twice()) / 2;
}

BlockLayout::Site BlockLayout::site(Index flat) const
{
    if (flat < 0 || flat >= dim_) throw std::out_of_range("flat index outside layout");
    Index block = block_count() - 1;
    while (offsets_[static_cast<std::size_t>(block)] > flat) --block;
    const HalfInt j = block_j(block);
    const Index step = flat - offset(block);
    return {block, HalfInt::from_twice(j.twice() - 2 * static_cast<int>(step))};
}

Index tensor_index(int n_a, int n_b, HalfInt m_a, HalfInt m_b)
{
    const HalfInt j_a = HalfInt::from_twice(n_a);
    const HalfInt j_b = HalfInt::from_twice(n_b);
    if (!is_valid_projection(j_a, m_a) || !is_valid_projection(j_b, m_b)) {
        throw std::out_of_range("projection outside tensor-product space");
    }
    return static_cast<Index>((j_a.twice() - m_a.twice()) / 2) * (n_b + 1) +
           (j_b.twice() - m_b.twice()) / 2;
}

StateDiagnostics diagnose(const DensityMatrix& rho)
{
    StateDiagnostics d{};
    d.hermiticity_error = (rho.data - rho.data.adjoint()).cwiseAbs().maxCoeff();
    d.trace_error = std::abs(rho.data.trace() - std::complex<double>(1.0, 0.0));
    const Eigen::MatrixXcd hermitian_part = 0.5 * (rho.data + rho.data.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    return d;
}

bool is_physical(const DensityMatrix& rho)
{
    const auto d = diagnose(rho);
    return d.hermiticity_error <= 1e-12 && d.trace_error <= 1e-10 && d.min_eigenvalue >= -1e-9;
}

void Trajectory::append(double t_tilde, DensityMatrix state)
{
    if (!times_.empty()) {
        if (!(t_tilde > times_.back())) {
            throw std::invalid_argument("trajectory times must be strictly increasing");
        }
        const auto& first = states_.front();
        if (state.basis != first.basis || state.n_a != first.n_a || state.n_b != first.n_b) {
            throw std::invalid_argument("trajectory states must share one basis");
        }
    }
    times_.push_back(t_tilde);
    states_.push_back(std::move(state));
}

const DensityMatrix& Trajectory::at_time(double t_tilde, double tol) const
{
    for (std::size_t k = 0; k < times_.size(); ++k) {
        if (std::abs(times_[k] - t_tilde) <= tol) return states_[k];
    }
    throw std::out_of_range("no trajectory sample at t=" + std::to_string(t_tilde));
}

Eigen::MatrixXd coupling_matrix(const BlockLayout& layout)
{
    const int n_a = layout.n_a();
    const int n_b = layout.n_b();
    const HalfInt j_a = layout.spec().j_a();
    const HalfInt j_b = layout.spec().j_b();
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());
    for (Index block = 0; block < layout.block_count(); ++block) {
        const HalfInt j = layout.block_j(block);
        for (int tm = j.twice(); tm >= -j.twice(); tm -= 2) {
            const HalfInt m = HalfInt::from_twice(tm);
            const Index col = layout.index(block, m);
            for (int tb = j_b.twice(); tb >= -j_b.twice(); tb -= 2) {
                const HalfInt m_b = HalfInt::from_twice(tb);
                const HalfInt m_a = m - m_b;
                if (!is_valid_projection(j_a, m_a)) continue;
                u(tensor_index(n_a, n_b, m_a, m_b), col) =
                    clebsch_gordan(j_b, j_a, m_b, m_a, j, m);
            }
        }
    }
    return u;
}

DensityMatrix initial_state(const BlockLayout& layout)
{
    const HalfInt j_a = layout.spec().j_a();
    const HalfInt j_b = layout.spec().j_b();
    const HalfInt m0 = j_a - j_b;
    Eigen::VectorXd amplitude = Eigen::VectorXd::Zero(layout.dim());
    for (Index block = 0; block < layout.block_count(); ++block) {
        const HalfInt j = layout.block_j(block);
        amplitude(layout.index(block, m0)) = clebsch_gordan(j_b, j_a, -j_b, j_a, j, m0);
    }
    DensityMatrix rho;
    rho.data = (amplitude * amplitude.transpose()).cast<std::complex<double>>();
    rho.basis = Basis::direct_sum;
    rho.n_a = layout.n_a();
    rho.n_b = layout.n_b();
    return rho;
}

DensityMatrix anti_parallel_product_state(int n_a, int n_b)
{
    (void)decompose(n_a, n_b);
    const Index dim = static_cast<Index>(n_a + 1) * (n_b + 1);
    DensityMatrix rho;
    rho.data = Eigen::MatrixXcd::Zero(dim, dim);
    const Index k = tensor_index(n_a, n_b, HalfInt::from_twice(n_a), HalfInt::from_twice(-n_b));
    rho.data(k, k) = 1.0;
    rho.basis = Basis::tensor_product;
    rho.n_a = n_a;
    rho.n_b = n_b;
    return rho;
}

DensityMatrix to_tensor_product(const DensityMatrix& rho)
{
    require_basis(rho, Basis::direct_sum, "to_tensor_product");
    const Eigen::MatrixXcd u = coupling_matrix(BlockLayout::for_sizes(rho.n_a, rho.n_b))
                                   .cast<std::complex<double>>();
    return {u * rho.data * u.transpose(), Basis::tensor_product, rho.n_a, rho.n_b};
}

DensityMatrix from_tensor_product(const DensityMatrix& rho)
{
    require_basis(rho, Basis::tensor_product, "from_tensor_product");
    const Eigen::MatrixXcd u = coupling_matrix(BlockLayout::for_sizes(rho.n_a, rho.n_b))
                                   .cast<std::complex<double>>();
    return {u.transpose() * rho.data * u, Basis::direct_sum, rho.n_a, rho.n_b};
}

double observable_jz(const DensityMatrix& rho, Domain domain)
{
    require_basis(rho, Basis::tensor_product, "observable_jz");
    const int d_b = rho.n_b + 1;
    double expectation = 0.0;
    for (Index k = 0; k < rho.dim(); ++k) {
        const int a = static_cast<int>(k / d_b);
        const int b = static_cast<int>(k % d_b);
        // m = j - step, in half units.
        const double m = (domain == Domain::A) ? 0.5 * rho.n_a - a : 0.5 * rho.n_b - b;
        expectation += m * rho.data(k, k).real();
    }
    return expectation;
}

std::vector<double> block_weights(const DensityMatrix& rho)
{
    require_basis(rho, Basis::direct_sum, "block_weights");
    const BlockLayout layout = BlockLayout::for_sizes(rho.n_a, rho.n_b);
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(layout.block_count()));
    for (Index block = 0; block < layout.block_count(); ++block) {
        weights.push_back(rho.data.diagonal()
                              .segment(layout.offset(block), layout.block_size(block))
                              .real()
                              .sum());
    }
    return weights;
}

} // namespace spindomain

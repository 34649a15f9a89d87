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

#include "spindomain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace spindomain {

namespace {

constexpr double kStationaryTol = 1e-10;

Eigen::MatrixXd single_lowering(int n_spins)
{
    const HalfInt j = HalfInt::from_twice(n_spins);
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n_spins + 1, n_spins + 1);
    // Row/column k holds m = j - k; J^- maps column k to row k + 1.
    for (int k = 0; k < n_spins; ++k) {
        op(k + 1, k) = ladder_element(j, HalfInt::from_twice(n_spins - 2 * k), Ladder::lower);
    }
    return op;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Column-stacked superoperator of X rho X^T scaled by 2, minus the anticommutator with X^T X.
Eigen::MatrixXd dissipator(const Eigen::MatrixXd& x)
{
    const Index d = x.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    const Eigen::MatrixXd xtx = x.transpose() * x;
    // vec(A rho B) = (B^T ⊗ A) vec(rho).
    return 2.0 * kron(x, x) - kron(id, xtx) - kron(xtx.transpose(), id);
}

void require_match(const Liouvillian& l, const DensityMatrix& rho)
{
    if (rho.basis != Basis::tensor_product) {
        throw std::invalid_argument("oracle expects a tensor_product density matrix");
    }
    if (rho.n_a != l.n_a || rho.n_b != l.n_b) {
        throw std::invalid_argument("oracle: state and Liouvillian sizes differ");
    }
}

Eigen::VectorXcd apply_real(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v)
{
    Eigen::VectorXcd out(v.size());
    out.real() = m * v.real();
    out.imag() = m * v.imag();
    return out;
}

} // namespace

Eigen::MatrixXd collective_lowering(int n_a, int n_b)
{
    const Eigen::MatrixXd id_a = Eigen::MatrixXd::Identity(n_a + 1, n_a + 1);
    const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(n_b + 1, n_b + 1);
    return kron(single_lowering(n_a), id_b) + kron(id_a, single_lowering(n_b));
}

Liouvillian build_liouvillian(int n_a, int n_b, double gamma, double nbar)
{
    if (n_a < 1 || n_b < 1) throw std::domain_error("build_liouvillian needs n_a, n_b >= 1");
    if (!(gamma > 0.0) || !(nbar >= 0.0)) {
        throw std::invalid_argument("build_liouvillian needs gamma > 0 and nbar >= 0");
    }
    const Index dim = static_cast<Index>(n_a + 1) * (n_b + 1);
    if (dim > kOracleMaxDim) {
        throw std::length_error("oracle dimension " + std::to_string(dim) + " exceeds " +
                                std::to_string(kOracleMaxDim));
    }
    const Eigen::MatrixXd lower = collective_lowering(n_a, n_b);
    Liouvillian l;
    l.matrix = gamma * (nbar + 1.0) * dissipator(lower);
    if (nbar > 0.0) l.matrix += gamma * nbar * dissipator(lower.transpose());
    l.gamma = gamma;
    l.nbar = nbar;
    l.n_a = n_a;
    l.n_b = n_b;
    return l;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho)
{
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Index dim)
{
    if (v.size() != dim * dim) throw std::invalid_argument("unvectorize: size mismatch");
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), dim, dim);
}

double stationarity_residual(const Liouvillian& l, const DensityMatrix& rho)
{
    require_match(l, rho);
    return apply_real(l.matrix, vectorize(rho.data)).cwiseAbs().maxCoeff();
}

DensityMatrix evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0, double t_tilde)
{
    require_match(l, rho0);
    if (t_tilde < 0.0) throw std::invalid_argument("evolve_oracle needs t~ >= 0");
    if (t_tilde == 0.0) return rho0;
    const Eigen::MatrixXd propagator = (l.matrix * (t_tilde / l.gamma)).exp();
    return {unvectorize(apply_real(propagator, vectorize(rho0.data)), l.state_dim()),
            Basis::tensor_product, l.n_a, l.n_b};
}

Trajectory evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0,
                         const std::vector<double>& t_tilde)
{
    require_match(l, rho0);
    Trajectory traj;
    Eigen::VectorXcd state = vectorize(rho0.data);
    double now = 0.0;
    double cached_dt = -1.0;
    Eigen::MatrixXd propagator;
    for (const double t : t_tilde) {
        if (t < now) throw std::invalid_argument("evolve_oracle: times must be ascending");
        const double dt = t - now;
        if (dt > 0.0) {
            // Uniform grids reuse a single propagator.
            if (std::abs(dt - cached_dt) > 1e-14 * std::max(1.0, dt)) {
                propagator = (l.matrix * (dt / l.gamma)).exp();
                cached_dt = dt;
            }
            state = apply_real(propagator, state);
        }
        now = t;
        traj.append(t, {unvectorize(state, l.state_dim()), Basis::tensor_product, l.n_a, l.n_b});
    }
    return traj;
}

DensityMatrix steady_state_oracle(const Liouvillian& l, const DensityMatrix& rho0)
{
    require_match(l, rho0);
    // Collective decay conserves total j, so the kernel of L is degenerate at
    // every temperature; the stationary limit is selected by rho0.
    double residual = 0.0;
    for (const double t : {20.0, 40.0, 80.0, 160.0, 200.0}) {
        DensityMatrix rho = evolve_oracle(l, rho0, t);
        residual = stationarity_residual(l, rho);
        if (residual <= kStationaryTol) return rho;
    }
    std::ostringstream msg;
    msg << "steady_state_oracle: not stationary by t~=200 (residual " << residual << ")";
    throw std::runtime_error(msg.str());
}

} // namespace spindomain

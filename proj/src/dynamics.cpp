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

#include "spindomain/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spindomain {

namespace {

constexpr double kTraceAbort = 1e-6;

double raise_factor(HalfInt j, HalfInt m)
{
    // A(j, m) = sqrt((j - m)(j + m + 1)), doubled units.
    const double jm = 0.5 * (j.twice() - m.twice());
    const double jp = 0.5 * (j.twice() + m.twice()) + 1.0;
    return std::sqrt(jm * jp);
}

double decay_factor(HalfInt j, HalfInt m)
{
    // B(j, m) = (j + m)(j - m + 1).
    return 0.5 * (j.twice() + m.twice()) * (0.5 * (j.twice() - m.twice()) + 1.0);
}

} // namespace

double EvolutionParams::default_step(int n_a)
{
    return 1e-3 * std::min(1.0, 1.0 / std::max(1, n_a));
}

void EvolutionParams::validate() const
{
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be at least 1");
}

BlockEquations::BlockEquations(const BlockLayout& layout, double gamma) : layout_(layout)
{
    const Index dim = layout.dim();
    Eigen::VectorXd a(dim), b(dim);
    for (Index p = 0; p < dim; ++p) {
        const auto site = layout.site(p);
        const HalfInt j = layout.block_j(site.block);
        a(p) = raise_factor(j, site.m);
        b(p) = decay_factor(j, site.m);
    }
    // Both coefficient matrices are exactly symmetric, so a Hermitian input
    // yields a bit-for-bit Hermitian derivative.
    feed_ = (2.0 * gamma * a) * a.transpose();
    decay_ = gamma * (b.replicate(1, dim) + b.transpose().replicate(dim, 1));
}

void BlockEquations::apply(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const
{
    out = -(decay_.cast<std::complex<double>>().cwiseProduct(rho));
    const Index blocks = layout_.block_count();
    for (Index i = 0; i < blocks; ++i) {
        const Index oi = layout_.offset(i);
        const Index si = layout_.block_size(i) - 1;
        if (si == 0) continue;
        for (Index l = 0; l < blocks; ++l) {
            const Index ol = layout_.offset(l);
            const Index sl = layout_.block_size(l) - 1;
            if (sl == 0) continue;
            // (i, m) x (l, m') is fed by (i, m+1) x (l, m'+1): one row up, one column left.
            out.block(oi + 1, ol + 1, si, sl) +=
                feed_.block(oi + 1, ol + 1, si, sl).cast<std::complex<double>>().cwiseProduct(
                    rho.block(oi, ol, si, sl));
        }
    }
}

Eigen::MatrixXcd eom_rhs(const DensityMatrix& rho, double gamma)
{
    if (rho.basis != Basis::direct_sum) {
        throw std::invalid_argument("eom_rhs expects a direct_sum density matrix");
    }
    const BlockEquations eqs(BlockLayout::for_sizes(rho.n_a, rho.n_b), gamma);
    Eigen::MatrixXcd out;
    eqs.apply(rho.data, out);
    return out;
}

namespace {

// One RK4 step of size h for d rho / dt~ = rhs(rho).
void rk4_step(const BlockEquations& eqs, double h, Eigen::MatrixXcd& rho, Eigen::MatrixXcd& k1,
              Eigen::MatrixXcd& k2, Eigen::MatrixXcd& k3, Eigen::MatrixXcd& k4,
              Eigen::MatrixXcd& tmp)
{
    eqs.apply(rho, k1);
    tmp = rho + (0.5 * h) * k1;
    eqs.apply(tmp, k2);
    tmp = rho + (0.5 * h) * k2;
    eqs.apply(tmp, k3);
    tmp = rho + h * k3;
    eqs.apply(tmp, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

Trajectory integrate(const DensityMatrix& rho0, const EvolutionParams& params)
{
    params.validate();
    if (rho0.basis != Basis::direct_sum) {
        throw std::invalid_argument("integrate expects a direct_sum density matrix");
    }
    // In t~ the rate gamma drops out: d rho / dt~ = rhs(rho; gamma = 1).
    const BlockEquations eqs(BlockLayout::for_sizes(rho0.n_a, rho0.n_b), 1.0);

    const auto steps = static_cast<long>(std::ceil(params.t_end / params.step - 1e-9));
    const double h = params.t_end / static_cast<double>(steps);
    const std::complex<double> trace0 = rho0.data.trace();

    Trajectory traj;
    traj.append(0.0, rho0);

    Eigen::MatrixXcd rho = rho0.data;
    Eigen::MatrixXcd k1, k2, k3, k4, tmp;
    for (long n = 1; n <= steps; ++n) {
        rk4_step(eqs, h, rho, k1, k2, k3, k4, tmp);
        const double drift = std::abs(rho.trace() - trace0);
        if (!(drift <= kTraceAbort)) {
            std::ostringstream msg;
            msg << "integration unstable at t~=" << static_cast<double>(n) * h
                << ": trace drift " << drift << " exceeds " << kTraceAbort << " with step " << h
                << "; try a step below " << EvolutionParams::default_step(rho0.n_a + rho0.n_b);
            throw std::runtime_error(msg.str());
        }
        if (n % params.sample_every == 0 || n == steps) {
            const double t = (n == steps) ? params.t_end : static_cast<double>(n) * h;
            traj.append(t, {rho, Basis::direct_sum, rho0.n_a, rho0.n_b});
        }
    }
    return traj;
}

DensityMatrix relax_to_stationary(const DensityMatrix& rho0, double step, double tol, double t_max)
{
    if (rho0.basis != Basis::direct_sum) {
        throw std::invalid_argument("relax_to_stationary expects a direct_sum density matrix");
    }
    if (!(step > 0.0)) throw std::invalid_argument("relax_to_stationary needs a positive step");
    const BlockEquations eqs(BlockLayout::for_sizes(rho0.n_a, rho0.n_b), 1.0);
    Eigen::MatrixXcd rho = rho0.data;
    Eigen::MatrixXcd k1, k2, k3, k4, tmp, rate;
    const auto max_steps = static_cast<long>(std::ceil(t_max / step));
    double residual = 0.0;
    for (long n = 0; n <= max_steps; ++n) {
        eqs.apply(rho, rate);
        residual = rate.cwiseAbs().maxCoeff();
        if (residual < tol) return {rho, Basis::direct_sum, rho0.n_a, rho0.n_b};
        rk4_step(eqs, step, rho, k1, k2, k3, k4, tmp);
    }
    std::ostringstream msg;
    msg << "no stationary state within t~=" << t_max << " (max |d rho/dt~| = " << residual << ")";
    throw std::runtime_error(msg.str());
}

double analytic_element(AnalyticElement kind, int n_a, double t_tilde)
{
    if (t_tilde < 0.0) throw std::invalid_argument("analytic_element needs t~ >= 0");
    const double n = n_a;
    switch (kind) {
    case AnalyticElement::rho22_nb1:
        return std::exp(-4.0 * n * t_tilde) / (n + 1.0);
    case AnalyticElement::rho_coh_nb1:
        return -std::sqrt(n) / (n + 1.0) * std::exp(-(3.0 * n - 1.0) * t_tilde);
    case AnalyticElement::rho33_nb2:
        return 2.0 / ((n + 1.0) * (n + 2.0)) * std::exp(-6.0 * n * t_tilde);
    }
    throw std::invalid_argument("unknown analytic element");
}

} // namespace spindomain

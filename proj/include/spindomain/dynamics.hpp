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

// Zero-temperature block equations of motion in the direct-sum
// basis, a fixed-step RK4 integrator, and closed-form reference solutions.

#pragma once

#include <Eigen/Dense>

#include "spindomain/state_space.hpp"

namespace spindomain {

struct EvolutionParams {
    double gamma{1.0};
    double t_end{1.0};   // dimensionless, t~ = gamma t
    double step{1e-3};   // in t~
    int sample_every{1};

    /// 1e-3 * min(1, 1/n_a).
    static double default_step(int n_a);
    /// Throws std::invalid_argument on gamma <= 0, t_end <= 0, step <= 0 or sample_every < 1.
    void validate() const;
};

/// Coefficients of the block equations for one layout.
///
/// For element (i, m) x (l, m'):
///   d rho / dt = 2 gamma A(j_i, m) A(j_l, m') rho_{(i, m+1), (l, m'+1)}
///                - gamma [B(j_i, m) + B(j_l, m')] rho_{(i, m), (l, m')}
/// with A(j, m) = sqrt((j - m)(j + m + 1)) and B(j, m) = (j + m)(j - m + 1).
/// The feeding term is absent on the first row/column of every block.
class BlockEquations {
public:
    BlockEquations(const BlockLayout& layout, double gamma);

    const BlockLayout& layout() const noexcept { return layout_; }

    /// out = d rho / dt. `out` is resized as needed.
    void apply(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const;

private:
    BlockLayout layout_;
    Eigen::MatrixXd feed_;   // 2 gamma A_p A_q (symmetric)
    Eigen::MatrixXd decay_;  // gamma (B_p + B_q) (symmetric)
};

/// Time derivative of a direct-sum density matrix at zero temperature.
Eigen::MatrixXcd eom_rhs(const DensityMatrix& rho, double gamma);

/// Classical RK4 in dimensionless time. The first sample is rho0 itself; a
/// sample is stored every `sample_every` steps and always at t_end. Throws
/// std::runtime_error when the trace drifts by more than 1e-6.
Trajectory integrate(const DensityMatrix& rho0, const EvolutionParams& params);

/// Integrate until max |d rho / dt~| < tol, or throw std::runtime_error past t_max.
DensityMatrix relax_to_stationary(const DensityMatrix& rho0, double step, double tol = 1e-12,
                                  double t_max = 400.0);

enum class AnalyticElement { rho22_nb1, rho_coh_nb1, rho33_nb2 };

/// Closed-form decays for the anti-parallel initial state:
///   rho22_nb1:   e^{-4N t}/(N+1)                    (element e_2,e_2; n_b = 1)
///   rho_coh_nb1: -sqrt(N)/(N+1) e^{-(3N-1) t}       (element e_2,e_{N+3}; n_b = 1)
///   rho33_nb2:   2 e^{-6N t}/((N+1)(N+2))           (element e_3,e_3; n_b = 2)
double analytic_element(AnalyticElement kind, int n_a, double t_tilde);

} // namespace spindomain

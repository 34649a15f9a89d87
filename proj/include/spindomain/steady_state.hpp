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

// Stationary states reached from the anti-parallel
// configuration and the observables derived from them.

#pragma once

#include <vector>

#include "spindomain/state_space.hpp"

namespace spindomain {

struct SteadyStateReport {
    DensityMatrix rho_ss;         // direct-sum basis
    std::vector<double> weights;  // P_i per block, block order of the layout
    double jz_a{0.0};
    double jz_b{0.0};
    double negativity{0.0};
    double entropy{0.0};
};

/// rho_ss = sum_i P_i |j_i; -j_i>><<j_i; -j_i|, with P_i the block weight of
/// the anti-parallel initial state (block weights are conserved by the
/// zero-temperature dynamics).
SteadyStateReport steady_state(const BlockLayout& layout);

/// Observables and block weights for an arbitrary direct-sum state.
SteadyStateReport analyze_state(const DensityMatrix& rho_direct_sum);

/// Printed rational forms of <J^z> at the steady state for n_b in {1, 2}.
/// Other n_b throw std::invalid_argument; use steady_state + observable_jz.
double polarization_closed_form(int n_a, int n_b, Domain domain);

/// Smallest n_a >= n_b whose steady-state <J^z_B> is positive.
int negative_temperature_threshold(int n_b);

} // namespace spindomain

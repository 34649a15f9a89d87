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

// JSON and CSV encodings of states, reports and trajectories.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spindomain/state_space.hpp"
#include "spindomain/steady_state.hpp"

namespace spindomain {

/// %.17g
std::string format_double(double value);

/// Element selector written `rho_<i>_<j>` with 1-based labels.
struct ElementLabel {
    Index row;  // 0-based
    Index col;  // 0-based
    std::string text;
};

/// nullopt for malformed labels or indices outside [1, dim].
std::optional<ElementLabel> parse_element_label(std::string_view text, Index dim);

/// {"basis", "n_a", "n_b", "labels", "re", "im"}; rows are row-major arrays.
nlohmann::json to_json(const DensityMatrix& rho);
/// Throws std::invalid_argument on malformed input.
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

/// {"n_a", "n_b", "weights", "jz_a", "jz_b", "negativity", "entropy"}.
nlohmann::json to_json(const SteadyStateReport& report);

/// Header `t_tilde,rho_i_j,...`; with_imag appends `im_rho_i_j` after each element.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          std::span<const ElementLabel> elements, bool with_imag = false);

} // namespace spindomain

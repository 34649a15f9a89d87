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

// Clebsch–Gordan coefficients, ladder matrix elements
// and the direct-sum decomposition of two coupled collective spins.

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace spindomain {

/// A half-integer stored as twice its value, so comparisons stay exact.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) noexcept
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt from_int(int value) noexcept { return from_twice(2 * value); }
    /// Throws std::domain_error unless 2*value is an integer.
    static HalfInt from_double(double value);

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return 0.5 * twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

    /// "3/2", "-1/2", "2"
    std::string to_string() const;

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const noexcept { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const noexcept { return from_twice(twice_ - o.twice_); }

private:
    int twice_{0};
};

constexpr HalfInt half(int twice) noexcept { return HalfInt::from_twice(twice); }

/// (j, m) pair; construct through make_spin_quantum to enforce |m| <= j and parity.
struct SpinQuantum {
    HalfInt j;
    HalfInt m;
};

SpinQuantum make_spin_quantum(HalfInt j, HalfInt m);

// True when j >= 0, |m| <= j and 2j, 2m share parity.
bool is_valid_projection(HalfInt j, HalfInt m) noexcept;

/// Condon–Shortley Clebsch–Gordan coefficient <j1 m1; j2 m2 | j m>.
///
/// Returns 0 when m != m1 + m2 or the triangle rule fails. Throws
/// std::domain_error when any (j_k, m_k) pair is not a valid projection.
/// Small arguments are evaluated with an exact factorial table; larger ones
/// accumulate the Racah sum through log-factorials.
double clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j, HalfInt m);

enum class Ladder { raise, lower };

/// sqrt(j(j+1) - m(m±1)); zero at the ends of the ladder.
double ladder_element(HalfInt j, HalfInt m, Ladder direction);

/// Blocks V_j of V_A ⊗ V_B for n_a ≥ n_b spins, j from (n_a+n_b)/2 down to (n_a-n_b)/2.
struct DecompositionSpec {
    int n_a{0};
    int n_b{0};
    std::vector<HalfInt> j_list;

    HalfInt j_a() const noexcept { return HalfInt::from_twice(n_a); }
    HalfInt j_b() const noexcept { return HalfInt::from_twice(n_b); }
    std::size_t block_count() const noexcept { return j_list.size(); }
    /// Sum of 2j+1 over the blocks; equals (n_a+1)(n_b+1).
    std::size_t total_dimension() const noexcept;
};

/// Throws std::domain_error unless n_a >= n_b >= 1.
DecompositionSpec decompose(int n_a, int n_b);

} // namespace spindomain

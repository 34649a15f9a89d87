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

#include "spindomain/angular_momentum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace spindomain {

namespace {

// n! for n <= kExactFactorials is held in long double; beyond that the
// Racah sum switches to log-factorials.
constexpr int kExactFactorials = 150;

const std::array<long double, kExactFactorials + 1>& factorial_table()
{
    static const auto table = [] {
        std::array<long double, kExactFactorials + 1> t{};
        t[0] = 1.0L;
        for (int n = 1; n <= kExactFactorials; ++n) {
            t[n] = t[n - 1] * static_cast<long double>(n);
        }
        return t;
    }();
    return table;
}

long double log_factorial(int n)
{
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

// Doubled arguments -> plain integer: (a_twice ± b_twice ...)/2, checked even.
int to_int(int twice_sum)
{
    return twice_sum / 2;
}

void require_projection(HalfInt j, HalfInt m, const char* what)
{
    if (!is_valid_projection(j, m)) {
        throw std::domain_error(std::string("invalid angular momentum pair for ") + what + ": j=" +
                                j.to_string() + ", m=" + m.to_string());
    }
}

} // namespace

HalfInt HalfInt::from_double(double value)
{
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9) {
        throw std::domain_error("not a half-integer: " + std::to_string(value));
    }
    return from_twice(static_cast<int>(rounded));
}

std::string HalfInt::to_string() const
{
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool is_valid_projection(HalfInt j, HalfInt m) noexcept
{
    return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() &&
           ((j.twice() - m.twice()) % 2 == 0);
}

SpinQuantum make_spin_quantum(HalfInt j, HalfInt m)
{
    require_projection(j, m, "SpinQuantum");
    return {j, m};
}

double clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j, HalfInt m)
{
    require_projection(j1, m1, "j1");
    require_projection(j2, m2, "j2");
    require_projection(j, m, "j");

    if (m1.twice() + m2.twice() != m.twice()) return 0.0;
    // Triangle rule, plus integrality of j1+j2+j.
    if (j.twice() < std::abs(j1.twice() - j2.twice()) || j.twice() > j1.twice() + j2.twice()) {
        return 0.0;
    }
    if ((j1.twice() + j2.twice() + j.twice()) % 2 != 0) return 0.0;

    const int J1 = j1.twice(), J2 = j2.twice(), J = j.twice();
    const int M1 = m1.twice(), M2 = m2.twice(), M = m.twice();

    // Triangle factorial arguments.
    const int a = to_int(J + J1 - J2);
    const int b = to_int(J - J1 + J2);
    const int c = to_int(J1 + J2 - J);
    const int d = to_int(J1 + J2 + J) + 1;
    // Projection factorial arguments.
    const std::array<int, 6> proj{to_int(J + M), to_int(J - M), to_int(J1 - M1),
                                  to_int(J1 + M1), to_int(J2 - M2), to_int(J2 + M2)};

    // Sum index bounds: all denominators non-negative.
    const int k_min = std::max({0, to_int(J2 - J - M1), to_int(J1 - J + M2)});
    const int k_max = std::min({c, to_int(J1 - M1), to_int(J2 + M2)});
    if (k_min > k_max) return 0.0;

    auto denominators = [&](int k) {
        return std::array<int, 6>{k, c - k, to_int(J1 - M1) - k, to_int(J2 + M2) - k,
                                  to_int(J - J2 + M1) + k, to_int(J - J1 - M2) + k};
    };

    const int largest = std::max({d, proj[0], proj[1], proj[2], proj[3], proj[4], proj[5]});
    if (largest <= kExactFactorials) {
        const auto& f = factorial_table();
        long double prefactor = (J + 1) * f[a] * f[b] * f[c] / f[d];
        for (int p : proj) prefactor *= f[p];
        long double sum = 0.0L;
        for (int k = k_min; k <= k_max; ++k) {
            long double denom = 1.0L;
            for (int q : denominators(k)) denom *= f[q];
            sum += ((k % 2 == 0) ? 1.0L : -1.0L) / denom;
        }
        return static_cast<double>(std::sqrt(prefactor) * sum);
    }

    long double log_prefactor = std::log(static_cast<long double>(J + 1)) + log_factorial(a) +
                                log_factorial(b) + log_factorial(c) - log_factorial(d);
    for (int p : proj) log_prefactor += log_factorial(p);
    const long double half_log_prefactor = 0.5L * log_prefactor;
    long double sum = 0.0L;
    for (int k = k_min; k <= k_max; ++k) {
        long double log_term = half_log_prefactor;
        for (int q : denominators(k)) log_term -= log_factorial(q);
        sum += ((k % 2 == 0) ? 1.0L : -1.0L) * std::exp(log_term);
    }
    return static_cast<double>(sum);
}

double ladder_element(HalfInt j, HalfInt m, Ladder direction)
{
    require_projection(j, m, "ladder_element");
    const long J = j.twice();
    const long M = m.twice();
    // 4 * (j(j+1) - m(m±1)) in doubled units.
    const long step = (direction == Ladder::raise) ? 2 : -2;
    const long four_times = J * (J + 2) - M * (M + step);
    if (four_times <= 0) return 0.0;
    return 0.5 * std::sqrt(static_cast<double>(four_times));
}

std::size_t DecompositionSpec::total_dimension() const noexcept
{
    std::size_t total = 0;
    for (HalfInt j : j_list) total += static_cast<std::size_t>(j.twice() + 1);
    return total;
}

DecompositionSpec decompose(int n_a, int n_b)
{
    if (n_b < 1 || n_a < n_b) {
        throw std::domain_error("decompose requires n_a >= n_b >= 1 (got n_a=" +
                                std::to_string(n_a) + ", n_b=" + std::to_string(n_b) + ")");
    }
    DecompositionSpec spec{n_a, n_b, {}};
    spec.j_list.reserve(static_cast<std::size_t>(n_b) + 1);
    for (int k = 0; k <= n_b; ++k) {
        spec.j_list.push_back(HalfInt::from_twice(n_a + n_b - 2 * k));
    }
    return spec;
}

} // namespace spindomain

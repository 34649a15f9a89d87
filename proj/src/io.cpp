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

#include "spindomain/io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace spindomain {

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::optional<Index> parse_label_index(std::string_view text)
{
    if (text.empty()) return std::nullopt;
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

nlohmann::json basis_labels(const DensityMatrix& rho)
{
    nlohmann::json labels = nlohmann::json::array();
    if (rho.basis == Basis::direct_sum) {
        const BlockLayout layout = BlockLayout::for_sizes(rho.n_a, rho.n_b);
        for (Index k = 0; k < layout.dim(); ++k) {
            const auto site = layout.site(k);
            labels.push_back({{"index", k + 1},
                              {"j", layout.block_j(site.block).to_string()},
                              {"m", site.m.to_string()}});
        }
    } else {
        for (Index k = 0; k < rho.dim(); ++k) {
            const int a = static_cast<int>(k / (rho.n_b + 1));
            const int b = static_cast<int>(k % (rho.n_b + 1));
            labels.push_back({{"index", k + 1},
                              {"m_a", HalfInt::from_twice(rho.n_a - 2 * a).to_string()},
                              {"m_b", HalfInt::from_twice(rho.n_b - 2 * b).to_string()}});
        }
    }
    return labels;
}

} // namespace

std::optional<ElementLabel> parse_element_label(std::string_view text, Index dim)
{
    constexpr std::string_view prefix = "rho_";
    if (!text.starts_with(prefix)) return std::nullopt;
    const std::string_view rest = text.substr(prefix.size());
    const auto sep = rest.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    const auto row = parse_label_index(rest.substr(0, sep));
    const auto col = parse_label_index(rest.substr(sep + 1));
    if (!row || !col || *row < 1 || *col < 1 || *row > dim || *col > dim) return std::nullopt;
    return ElementLabel{*row - 1, *col - 1, std::string(text)};
}

nlohmann::json to_json(const DensityMatrix& rho)
{
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Index r = 0; r < rho.dim(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (Index c = 0; c < rho.dim(); ++c) {
            re_row.push_back(rho.data(r, c).real());
            im_row.push_back(rho.data(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"basis", to_string(rho.basis)}, {"n_a", rho.n_a},   {"n_b", rho.n_b},
            {"labels", basis_labels(rho)},   {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix density_matrix_from_json(const nlohmann::json& j)
{
    try {
        DensityMatrix rho;
        const std::string basis = j.at("basis").get<std::string>();
        if (basis == "direct_sum") {
            rho.basis = Basis::direct_sum;
        } else if (basis == "tensor_product") {
            rho.basis = Basis::tensor_product;
        } else {
            throw std::invalid_argument("unknown basis '" + basis + "'");
        }
        rho.n_a = j.at("n_a").get<int>();
        rho.n_b = j.at("n_b").get<int>();
        (void)decompose(rho.n_a, rho.n_b);
        const Index dim = static_cast<Index>(rho.n_a + 1) * (rho.n_b + 1);
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        if (re.size() != static_cast<std::size_t>(dim) || im.size() != re.size()) {
            throw std::invalid_argument("matrix rows do not match (n_a+1)(n_b+1)");
        }
        rho.data.resize(dim, dim);
        for (Index r = 0; r < dim; ++r) {
            const auto& re_row = re.at(static_cast<std::size_t>(r));
            const auto& im_row = im.at(static_cast<std::size_t>(r));
            if (re_row.size() != static_cast<std::size_t>(dim) || im_row.size() != re_row.size()) {
                throw std::invalid_argument("matrix row has the wrong length");
            }
            for (Index c = 0; c < dim; ++c) {
                rho.data(r, c) = {re_row.at(static_cast<std::size_t>(c)).get<double>(),
                                  im_row.at(static_cast<std::size_t>(c)).get<double>()};
            }
        }
        return rho;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed density matrix JSON: ") + e.what());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("malformed density matrix JSON: ") + e.what());
    }
}

nlohmann::json to_json(const SteadyStateReport& report)
{
    return {{"n_a", report.rho_ss.n_a},       {"n_b", report.rho_ss.n_b},
            {"weights", report.weights},      {"jz_a", report.jz_a},
            {"jz_b", report.jz_b},            {"negativity", report.negativity},
            {"entropy", report.entropy}};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          std::span<const ElementLabel> elements, bool with_imag)
{
    os << "t_tilde";
    for (const auto& e : elements) {
        os << ',' << e.text;
        if (with_imag) os << ",im_" << e.text;
    }
    os << '\n';
    for (std::size_t k = 0; k < traj.size(); ++k) {
        os << format_double(traj.times()[k]);
        const auto& rho = traj.states()[k].data;
        for (const auto& e : elements) {
            os << ',' << format_double(rho(e.row, e.col).real());
            if (with_imag) os << ',' << format_double(rho(e.row, e.col).imag());
        }
        os << '\n';
    }
}

} // namespace spindomain

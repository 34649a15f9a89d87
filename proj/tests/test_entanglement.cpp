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


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "spindomain/entanglement.hpp"
#include "spindomain/steady_state.hpp"

using namespace spindomain;

namespace {

const BipartiteDims kQubits{2, 2};

Eigen::Matrix4cd bell_projector()
{
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    return phi * phi.adjoint();
}

Eigen::MatrixXcd random_state(Index dim, unsigned seed)
{
    std::srand(seed);
    const Eigen::MatrixXcd g = Eigen::MatrixXcd::Random(dim, dim);
    Eigen::MatrixXcd rho = g * g.adjoint();
    return rho / rho.trace();
}

} // namespace

TEST_CASE("partial transpose basics")
{
    const Eigen::VectorXcd d = Eigen::VectorXcd::LinSpaced(6, 0.1, 0.6);
    const Eigen::MatrixXcd diag = d.asDiagonal();
    CHECK((partial_transpose(diag, {3, 2}, Domain::A) - diag).cwiseAbs().maxCoeff() == 0.0);
    CHECK((partial_transpose(diag, {3, 2}, Domain::B) - diag).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd pt = partial_transpose(bell_projector(), kQubits, Domain::A);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt);
    CHECK(solver.eigenvalues().minCoeff() == doctest::Approx(-0.5));
    CHECK(std::abs(pt.trace() - 1.0) <= 1e-15);

    CHECK_THROWS_AS(partial_transpose(diag, {2, 2}, Domain::A), std::invalid_argument);
}

TEST_CASE("partial transpose is an involution and both sides share a spectrum")
{
    for (unsigned seed = 1; seed <= 5; ++seed) {
        const BipartiteDims dims{4, 3};
        const Eigen::MatrixXcd rho = random_state(dims.dim(), seed);
        for (Domain side : {Domain::A, Domain::B}) {
            const Eigen::MatrixXcd twice =
                partial_transpose(partial_transpose(rho, dims, side), dims, side);
            CHECK((twice - rho).cwiseAbs().maxCoeff() == 0.0);
        }
        const Eigen::MatrixXcd ga = partial_transpose(rho, dims, Domain::A);
        const Eigen::MatrixXcd gb = partial_transpose(rho, dims, Domain::B);
        CHECK(hermiticity_error(ga) <= 1e-15);
        const Eigen::VectorXd ea = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(ga).eigenvalues();
        const Eigen::VectorXd eb = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(gb).eigenvalues();
        CHECK((ea - eb).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("trace norm")
{
    CHECK(trace_norm(Eigen::MatrixXd::Identity(5, 5)) == doctest::Approx(5.0));
    Eigen::Matrix2d m;
    m << 1.0, 0.0, 0.0, -0.5;
    CHECK(trace_norm(m) == doctest::Approx(1.5));
    CHECK(trace_norm(random_state(6, 9)) == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::Matrix2d skew;
    skew << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(trace_norm(skew), std::invalid_argument);
    CHECK_THROWS_AS(trace_norm(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("logarithmic negativity")
{
    Eigen::MatrixXcd product = Eigen::MatrixXcd::Zero(4, 4);
    product(1, 1) = 1.0;
    CHECK(log_negativity(product, kQubits) == 0.0);
    CHECK(log_negativity(bell_projector(), kQubits) == doctest::Approx(1.0).epsilon(1e-12));

    const DensityMatrix n5 = to_tensor_product(steady_state(BlockLayout::for_sizes(5, 1)).rho_ss);
    CHECK(log_negativity(n5) == doctest::Approx(0.56218).epsilon(1e-4));
    const DensityMatrix n1 = to_tensor_product(steady_state(BlockLayout::for_sizes(1, 1)).rho_ss);
    CHECK(log_negativity(n1) == doctest::Approx(std::log2((2.0 * std::sqrt(2.0) + 2.0) / 4.0)));
    CHECK_THROWS_AS(log_negativity(steady_state(BlockLayout::for_sizes(1, 1)).rho_ss),
                    std::invalid_argument);
}

TEST_CASE("negativity closed form")
{
    CHECK(negativity_closed_form_nb1(1) == doctest::Approx(0.27155).epsilon(1e-4));
    CHECK(negativity_closed_form_nb1(5) == doctest::Approx(0.56218).epsilon(1e-4));
    for (int n = 1; n <= 60; ++n) {
        if (n != 5) CHECK(negativity_closed_form_nb1(n) < negativity_closed_form_nb1(5));
    }
    CHECK(negativity_closed_form_nb1(1e8) < 1e-3);
    for (int n = 1; n <= 20; ++n) {
        const DensityMatrix tp =
            to_tensor_product(steady_state(BlockLayout::for_sizes(n, 1)).rho_ss);
        CHECK(std::abs(log_negativity(tp) - negativity_closed_form_nb1(n)) <= 1e-9);
    }
}

TEST_CASE("von Neumann entropy")
{
    CHECK(von_neumann_entropy(bell_projector()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(Eigen::MatrixXcd::Identity(4, 4) / 4.0) == doctest::Approx(2.0));
    CHECK(von_neumann_entropy(steady_state(BlockLayout::for_sizes(1, 1)).rho_ss) ==
          doctest::Approx(1.0));
    CHECK(von_neumann_entropy(steady_state(BlockLayout::for_sizes(3, 1)).rho_ss) ==
          doctest::Approx(0.81128).epsilon(1e-5));

    double previous = 1.0;
    for (int n = 1; n <= 30; ++n) {
        const double s = von_neumann_entropy(steady_state(BlockLayout::for_sizes(n, 1)).rho_ss);
        CHECK(std::abs(s - entropy_closed_form_nb1(n)) <= 1e-10);
        if (n > 1) CHECK(s < previous);
        previous = s;
    }
    CHECK(entropy_closed_form_nb1(1e7) < 1e-5);

    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 0) = 1.1;
    bad(1, 1) = -0.1;
    CHECK_THROWS_AS(von_neumann_entropy(bad), std::domain_error);

    Eigen::MatrixXcd tiny = Eigen::MatrixXcd::Zero(2, 2);
    tiny(0, 0) = 1.0 + 1e-13;
    tiny(1, 1) = -1e-13;
    CHECK(von_neumann_entropy(tiny) == doctest::Approx(0.0).epsilon(1e-10));
}

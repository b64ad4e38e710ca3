// SPDX-License-Identifier: Apache-2.0
//
// csipca: PCA-based CSI compression toolkit for massive-MIMO feedback
// Copyright (C) 2026 The csipca authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "catch_amalgamated.hpp"
#include "csipca/linalg.hpp"
#include "oracles.hpp"

using namespace csipca;

TEST_CASE("Jacobi SVD - singular values match the bidiagonal SVD")
{
    std::mt19937_64 rng(41);
    const std::vector<std::pair<Eigen::Index, Eigen::Index>> shapes{{25, 32}, {32, 8}, {5, 32}, {1, 4}, {13, 13}, {3, 1}};
    for (auto [r, c] : shapes)
    {
        const cmat a = oracle::random_matrix(rng, r, c);
        auto s = linalg::jacobi_svd(a);
        REQUIRE(s.singular_values.size() == c);
        const auto ref = oracle::singular_values(a);
        for (Eigen::Index i = 0; i < std::min(r, c); ++i)
            CHECK(std::abs(s.singular_values(i) - ref(i)) < 1e-11 * ref(0));
        for (Eigen::Index i = std::min(r, c); i < c; ++i)
            CHECK(s.singular_values(i) < 1e-11 * ref(0));
        for (Eigen::Index i = 1; i < c; ++i)
            CHECK(s.singular_values(i) <= s.singular_values(i - 1));
        CHECK((s.v.adjoint() * s.v - cmat::Identity(c, c)).norm() < 1e-12);
        // A V has orthogonal columns with norms equal to the singular values.
        const cmat av = a * s.v;
        for (Eigen::Index i = 0; i < c; ++i)
            CHECK(std::abs(av.col(i).norm() - s.singular_values(i)) < 1e-11 * ref(0));
    }
}

TEST_CASE("Jacobi SVD - prescribed spectra including repeated and zero values")
{
    std::mt19937_64 rng(43);
    const std::vector<double> sigma{5.0, 3.0, 3.0, 1e-3, 0.0, 0.0};
    const cmat a = oracle::matrix_with_spectrum(rng, 10, 6, sigma);
    auto s = linalg::jacobi_svd(a);
    for (Eigen::Index i = 0; i < 6; ++i)
        CHECK(std::abs(s.singular_values(i) - sigma[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("Jacobi SVD - zero and diagonal inputs")
{
    auto z = linalg::jacobi_svd(cmat::Zero(4, 3));
    CHECK(z.singular_values.norm() == 0.0);
    CHECK((z.v - cmat::Identity(3, 3)).norm() == 0.0);

    cmat d = cmat::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 4.0;
    d(2, 2) = 2.0;
    auto s = linalg::jacobi_svd(d);
    CHECK(s.singular_values(0) == 4.0);
    CHECK(s.singular_values(1) == 2.0);
    CHECK(s.singular_values(2) == 1.0);
    CHECK(std::abs(s.v(1, 0)) == 1.0);
}

TEST_CASE("Jacobi SVD - deterministic")
{
    std::mt19937_64 rng(47);
    const cmat a = oracle::random_matrix(rng, 25, 32);
    auto s1 = linalg::jacobi_svd(a);
    auto s2 = linalg::jacobi_svd(a);
    CHECK(s1.v == s2.v);
    CHECK(s1.singular_values == s2.singular_values);
    CHECK(s1.sweeps < 80);
}

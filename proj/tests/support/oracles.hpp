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

#ifndef CSIPCA_TEST_ORACLES_HPP
#define CSIPCA_TEST_ORACLES_HPP

// Reference computations for the test suites. Each oracle takes a different route from the
// library code it checks: direct sums instead of matrix products, Eigen's Hermitian
// eigensolver / bidiagonal SVD instead of the library's Jacobi SVD.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;
    using cmat = Eigen::MatrixXcd;
    using cvec = Eigen::VectorXcd;

    inline cmat random_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols)
    {
        std::normal_distribution<double> g(0.0, 1.0);
        cmat m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
            {
                const double re = g(rng);
                const double im = g(rng);
                m(i, j) = cplx(re, im);
            }
        return m;
    }

    // Random matrix with a prescribed singular spectrum: U diag(sigma) V^H with Haar-ish U, V.
    inline cmat matrix_with_spectrum(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols,
                                     const std::vector<double> &sigma)
    {
        Eigen::HouseholderQR<cmat> qu(random_matrix(rng, rows, rows));
        Eigen::HouseholderQR<cmat> qv(random_matrix(rng, cols, cols));
        const cmat u = qu.householderQ() * cmat::Identity(rows, rows);
        const cmat v = qv.householderQ() * cmat::Identity(cols, cols);
        cmat s = cmat::Zero(rows, cols);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = sigma[i];
        return u * s * v.adjoint();
    }

    inline double rel_err(const cmat &a, const cmat &b)
    {
        const double scale = std::max(b.norm(), 1e-300);
        return (a - b).norm() / scale;
    }

    // H_ad[l, a] = 1/sqrt(N N_t) sum_s sum_t H[s, t] exp(-j2pi l s / N) exp(+j2pi a t / N_t)
    inline cmat naive_angular_delay(const cmat &h)
    {
        const auto n = h.rows();
        const auto nt = h.cols();
        cmat out(n, nt);
        const double two_pi = 2.0 * std::numbers::pi;
        for (Eigen::Index l = 0; l < n; ++l)
            for (Eigen::Index a = 0; a < nt; ++a)
            {
                cplx acc = 0.0;
                for (Eigen::Index s = 0; s < n; ++s)
                    for (Eigen::Index t = 0; t < nt; ++t)
                    {
                        const double phase = -two_pi * static_cast<double>((l * s) % n) / static_cast<double>(n) +
                                             two_pi * static_cast<double>((a * t) % nt) / static_cast<double>(nt);
                        acc += h(s, t) * std::polar(1.0, phase);
                    }
                out(l, a) = acc / std::sqrt(static_cast<double>(n * nt));
            }
        return out;
    }

    // Oracle-local phase convention: largest-magnitude entry real positive, first index on ties.
    inline void fix_phase(Eigen::Ref<cvec> v)
    {
        Eigen::Index best = 0;
        for (Eigen::Index i = 1; i < v.size(); ++i)
            if (std::abs(v(i)) > std::abs(v(best)))
                best = i;
        if (std::abs(v(best)) == 0.0)
            return;
        v *= std::conj(v(best)) / std::abs(v(best));
    }

    struct gram_eig
    {
        Eigen::VectorXd sigma; // nonincreasing
        cmat v;                // matching eigenvectors, phase fixed
    };

    // Right singular pairs from the Hermitian eigen-decomposition of A^H A.
    inline gram_eig gram_evd(const cmat &a)
    {
        const cmat gram = a.adjoint() * a;
        Eigen::SelfAdjointEigenSolver<cmat> es(gram);
        const auto d = gram.cols();
        gram_eig out;
        out.sigma.resize(d);
        out.v.resize(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
        {
            const auto src = d - 1 - i;
            out.sigma(i) = std::sqrt(std::max(0.0, es.eigenvalues()(src)));
            out.v.col(i) = es.eigenvectors().col(src);
            fix_phase(out.v.col(i));
        }
        return out;
    }

    // Best rank-k approximation from Eigen's divide-and-conquer SVD.
    inline cmat truncated_svd(const cmat &a, Eigen::Index k)
    {
        Eigen::BDCSVD<cmat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        return svd.matrixU().leftCols(k) * svd.singularValues().head(k).asDiagonal() *
               svd.matrixV().leftCols(k).adjoint();
    }

    inline Eigen::VectorXd singular_values(const cmat &a)
    {
        Eigen::BDCSVD<cmat> svd(a);
        return svd.singularValues();
    }

    inline double tail_energy(const Eigen::VectorXd &sigma, Eigen::Index k)
    {
        double t = 0.0;
        for (Eigen::Index i = k; i < sigma.size(); ++i)
            t += sigma(i) * sigma(i);
        return std::sqrt(t);
    }

    inline double cumulative_fraction(const Eigen::VectorXd &sigma, Eigen::Index k)
    {
        double head = 0.0, total = 0.0;
        for (Eigen::Index i = 0; i < sigma.size(); ++i)
        {
            total += sigma(i) * sigma(i);
            if (i < k)
                head += sigma(i) * sigma(i);
        }
        return head / total;
    }

    // Random orthonormal D x k matrix.
    inline cmat random_isometry(std::mt19937_64 &rng, Eigen::Index d, Eigen::Index k)
    {
        Eigen::HouseholderQR<cmat> qr(random_matrix(rng, d, k));
        return qr.householderQ() * cmat::Identity(d, k);
    }
}

#endif

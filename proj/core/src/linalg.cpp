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

#include "csipca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace csipca::linalg
{
    right_singular_system jacobi_svd(const cmat &input)
    {
        constexpr int max_sweeps = 80;
        const double eps = std::numeric_limits<double>::epsilon();

        cmat a = input;
        const Eigen::Index d = a.cols();
        cmat v = cmat::Identity(d, d);

        // Columns whose energy is at the rounding-noise floor of A are left alone; rotating
        // noise against noise never converges and does not change the result.
        const double frob2 = a.squaredNorm();
        const double floor2 = frob2 * (static_cast<double>(d) * eps) * (static_cast<double>(d) * eps);

        int sweep = 0;
        for (; sweep < max_sweeps; ++sweep)
        {
            bool rotated = false;
            for (Eigen::Index p = 0; p + 1 < d; ++p)
                for (Eigen::Index q = p + 1; q < d; ++q)
                {
                    const double alpha = a.col(p).squaredNorm();
                    const double beta = a.col(q).squaredNorm();
                    if (alpha <= floor2 || beta <= floor2)
                        continue;
                    const cplx gamma = a.col(p).dot(a.col(q)); // a_p^H a_q
                    const double g = std::abs(gamma);
                    if (g <= 4.0 * eps * std::sqrt(alpha * beta))
                        continue;
                    rotated = true;

                    // Rotate a_q by the phase of gamma, then apply the real Jacobi rotation.
                    const cplx phase = gamma / g;
                    const double zeta = (beta - alpha) / (2.0 * g);
                    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = c * t;
                    const cplx conj_phase = std::conj(phase);

                    for (Eigen::Index i = 0; i < a.rows(); ++i)
                    {
                        const cplx ap = a(i, p);
                        const cplx bq = a(i, q) * conj_phase;
                        a(i, p) = c * ap - s * bq;
                        a(i, q) = s * ap + c * bq;
                    }
                    for (Eigen::Index i = 0; i < d; ++i)
                    {
                        const cplx vp = v(i, p);
                        const cplx wq = v(i, q) * conj_phase;
                        v(i, p) = c * vp - s * wq;
                        v(i, q) = s * vp + c * wq;
                    }
                }
            if (!rotated)
                break;
        }

        std::vector<double> sigma(static_cast<std::size_t>(d));
        for (Eigen::Index j = 0; j < d; ++j)
            sigma[static_cast<std::size_t>(j)] = a.col(j).norm();
        std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
            return sigma[static_cast<std::size_t>(x)] > sigma[static_cast<std::size_t>(y)];
        });

        right_singular_system out;
        out.sweeps = sweep;
        out.singular_values.resize(d);
        out.v.resize(d, d);
        for (Eigen::Index j = 0; j < d; ++j)
        {
            const auto src = order[static_cast<std::size_t>(j)];
            out.singular_values(j) = sigma[static_cast<std::size_t>(src)];
            out.v.col(j) = v.col(src);
        }
        return out;
    }
}

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

#include "csipca/pca.hpp"
#include "csipca/errors.hpp"
#include "csipca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace csipca
{
    std::vector<double> pca_basis::explained_variance() const
    {
        const double total = singular_values.squaredNorm();
        if (!(total > 0.0))
            throw degenerate_input_error("pca: all-zero singular value spectrum");
        std::vector<double> out(k_max());
        for (std::size_t i = 0; i < out.size(); ++i)
        {
            const double s = singular_values(static_cast<Eigen::Index>(i));
            out[i] = s * s / total;
        }
        return out;
    }

    void csi_report::validate() const
    {
        if (compressed.cols() != transform.cols())
            throw input_error("csi_report: compressed and transform disagree on the component count (" +
                              std::to_string(compressed.cols()) + " vs " + std::to_string(transform.cols()) + ")");
        if (transform.cols() == 0 || compressed.rows() == 0 || transform.rows() == 0)
            throw input_error("csi_report: empty payload");
        if (report_mode == mode::angular_delay && !tap_indices.empty())
        {
            if (tap_indices.size() != static_cast<std::size_t>(compressed.rows()))
                throw input_error("csi_report: tap index count does not match compressed rows");
            for (std::size_t i = 0; i < tap_indices.size(); ++i)
                if (tap_indices[i] >= n_full || (i > 0 && tap_indices[i] <= tap_indices[i - 1]))
                    throw input_error("csi_report: tap indices must be strictly increasing and < n_full");
        }
    }

    pca_basis pca_fit(const cmat &matrix, mode m)
    {
        if (matrix.rows() < 1 || matrix.cols() < 1)
            throw input_error("pca_fit: empty matrix");
        if (!all_finite(matrix))
            throw input_error("pca_fit: non-finite entry");

        const auto svd = linalg::jacobi_svd(matrix);
        const Eigen::Index k_max = std::min(matrix.rows(), matrix.cols());

        pca_basis basis;
        basis.fitted_mode = m;
        basis.singular_values = svd.singular_values.head(k_max);
        basis.components = svd.v.leftCols(k_max);
        for (Eigen::Index j = 0; j < k_max; ++j)
            normalize_phase(basis.components.col(j));
        return basis;
    }

    std::size_t choose_components(const pca_basis &basis, double variance_threshold)
    {
        if (!(variance_threshold > 0.0 && variance_threshold <= 1.0))
            throw input_error("choose_components: threshold must lie in (0, 1]");
        const auto k_max = basis.k_max();
        double total = 0.0;
        for (std::size_t i = 0; i < k_max; ++i)
            total += basis.singular_values(static_cast<Eigen::Index>(i)) * basis.singular_values(static_cast<Eigen::Index>(i));
        if (!(total > 0.0))
            throw degenerate_input_error("choose_components: all-zero singular value spectrum");

        // Components at or below the rank tolerance carry only round-off, so the numerical
        // rank caps the answer (threshold 1 returns exactly the numerical rank).
        const double tol = basis.singular_values(0) * static_cast<double>(std::max<Eigen::Index>(basis.components.rows(), 1)) *
                           std::numeric_limits<double>::epsilon();
        std::size_t rank = 0;
        while (rank < k_max && basis.singular_values(static_cast<Eigen::Index>(rank)) > tol)
            ++rank;

        double cumulative = 0.0;
        for (std::size_t k = 1; k <= rank; ++k)
        {
            const double s = basis.singular_values(static_cast<Eigen::Index>(k - 1));
            cumulative += s * s;
            if (cumulative >= variance_threshold * total)
                return k;
        }
        return rank;
    }

    csi_report compress(const cmat &matrix, const pca_basis &basis, std::size_t k)
    {
        if (k < 1 || k > basis.k_max())
            throw input_error("compress: k = " + std::to_string(k) + " outside [1, " + std::to_string(basis.k_max()) + "]");
        if (matrix.cols() != basis.components.rows())
            throw input_error("compress: matrix has " + std::to_string(matrix.cols()) +
                              " columns but the basis dimension is " + std::to_string(basis.components.rows()));
        csi_report r;
        r.report_mode = basis.fitted_mode;
        r.transform = basis.components.leftCols(static_cast<Eigen::Index>(k));
        r.compressed.noalias() = matrix * r.transform;
        return r;
    }

    cmat reconstruct(const csi_report &report)
    {
        report.validate();
        return report.compressed * report.transform.adjoint();
    }

    csi_report compress_ad(const tap_channel &t, std::size_t k)
    {
        t.validate();
        auto r = compress(t.data, pca_fit(t.data, mode::angular_delay), k);
        r.tap_indices = t.tap_indices;
        r.n_full = t.n_full;
        return r;
    }

    csi_report compress_ev(const ev_matrix &e, std::size_t k)
    {
        return compress(e.data, pca_fit(e.data, mode::eigenvector), k);
    }

    tap_channel reconstruct_taps(const csi_report &report)
    {
        if (report.report_mode != mode::angular_delay)
            throw input_error("reconstruct_taps: report is not an angular-delay report");
        tap_channel t;
        t.data = reconstruct(report);
        t.tap_indices = report.tap_indices;
        t.n_full = report.n_full;
        t.validate();
        return t;
    }
}

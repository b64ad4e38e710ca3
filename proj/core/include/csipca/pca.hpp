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

#ifndef CSIPCA_PCA_HPP
#define CSIPCA_PCA_HPP

#include "csipca/types.hpp"
#include "csipca/xforms.hpp"

#include <optional>
#include <vector>

namespace csipca
{
    // Per-instance PCA basis: right singular vectors of the raw (not mean-centered) matrix.
    struct pca_basis
    {
        cmat components;      // D x K_max, orthonormal columns, phase-normalized
        rvec singular_values; // K_max, nonincreasing
        mode fitted_mode = mode::angular_delay;

        std::size_t k_max() const { return static_cast<std::size_t>(singular_values.size()); }

        // sigma_i^2 / sum sigma^2 per component. Throws degenerate_input_error on an all-zero spectrum.
        std::vector<double> explained_variance() const;
    };

    // The feedback payload a UE would send: compressed matrix and transformation matrix.
    //   AD: compressed L x k, transform N_t x k, tap_indices and n_full describe the taps
    //   EV: compressed N_t x k, transform N_SB x k
    // When q_bits is set the payloads hold quantize/dequantize level values.
    struct csi_report
    {
        mode report_mode = mode::angular_delay;
        cmat compressed;
        cmat transform;
        std::optional<unsigned> q_bits;
        std::vector<std::size_t> tap_indices;
        std::size_t n_full = 0;

        std::size_t k() const { return static_cast<std::size_t>(transform.cols()); }
        void validate() const;
    };

    pca_basis pca_fit(const cmat &matrix, mode m = mode::angular_delay);

    // Smallest k whose cumulative explained variance reaches `variance_threshold`.
    std::size_t choose_components(const pca_basis &basis, double variance_threshold = 0.99);

    csi_report compress(const cmat &matrix, const pca_basis &basis, std::size_t k);

    // compressed * transform^H
    cmat reconstruct(const csi_report &report);

    csi_report compress_ad(const tap_channel &t, std::size_t k);
    csi_report compress_ev(const ev_matrix &e, std::size_t k);

    // Re-wraps an AD reconstruction as a tap channel so it can be embedded and inverse transformed.
    tap_channel reconstruct_taps(const csi_report &report);
}

#endif

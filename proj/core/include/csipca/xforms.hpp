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

#ifndef CSIPCA_XFORMS_HPP
#define CSIPCA_XFORMS_HPP

#include "csipca/chanforge.hpp"
#include "csipca/types.hpp"

#include <memory>
#include <span>
#include <vector>

namespace csipca
{
    // Full angular-delay matrix H_ad = F_d H_f F_a^H (N x N_t).
    struct angular_delay
    {
        cmat data;
        double subcarrier_spacing_hz = 15e3;
        std::uint64_t sample_id = 0;
    };

    enum class tap_policy
    {
        top_energy, // L highest-energy rows, ties to the lower index, kept in ascending index order
        first_l     // rows 0 .. L-1
    };

    const char *to_string(tap_policy p);
    tap_policy parse_tap_policy(std::string_view text);

    // L retained rows of an angular-delay matrix and where they came from.
    struct tap_channel
    {
        cmat data;                             // L x N_t
        std::vector<std::size_t> tap_indices;  // strictly increasing, each < n_full
        std::size_t n_full = 0;

        std::size_t n_taps() const { return tap_indices.size(); }
        void validate() const;
    };

    // Concatenated per-sub-band dominant eigenvectors, N_t x N_SB. Rank-1 reports only.
    struct ev_matrix
    {
        cmat data;
        std::size_t rank = 1;
    };

    // Unitary n-point DFT matrix, F(r, c) = exp(-j 2 pi r c / n) / sqrt(n). Cached per size.
    std::shared_ptr<const cmat> unitary_dft(std::size_t n);

    angular_delay to_angular_delay(const cfr &h);
    cfr from_angular_delay(const angular_delay &h_ad);

    tap_channel select_taps(const angular_delay &h_ad, std::size_t n_taps, tap_policy policy = tap_policy::top_energy);
    angular_delay embed_taps(const tap_channel &t, double subcarrier_spacing_hz = 15e3, std::uint64_t sample_id = 0);

    // Same result as from_angular_delay(embed_taps(t)) but only touches the retained rows:
    // H_f = F_d^H(:, taps) * H_tL * F_a.
    cfr from_tap_channel(const tap_channel &t, double subcarrier_spacing_hz = 15e3, std::uint64_t sample_id = 0);

    // Mean of the rows of each of the n_sb equal-width sub-bands.
    std::vector<crow> subband_average(const cfr &h, std::size_t n_sb);

    // Column k is the dominant unit-norm eigenvector of h_k^H h_k, phase-normalized.
    ev_matrix subband_eigenvectors(std::span<const crow> subbands);
}

#endif

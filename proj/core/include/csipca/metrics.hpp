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

#ifndef CSIPCA_METRICS_HPP
#define CSIPCA_METRICS_HPP

#include "csipca/types.hpp"

#include <cstdint>
#include <string_view>

namespace csipca
{
    enum class gcs_variant
    {
        vectorized,     // |<vec(H_hat), vec(H)>| / (|H_hat|_F |H|_F)
        per_column_mean // mean over columns of the per-column cosine similarity
    };

    const char *to_string(gcs_variant v);
    gcs_variant parse_gcs_variant(std::string_view text);

    // Generalized cosine similarity in [0, 1]. A zero reference (or zero reference column for
    // the per-column variant) is a degenerate_input_error; a zero estimate scores 0.
    double gcs(const cmat &estimate, const cmat &reference, gcs_variant variant = gcs_variant::vectorized);

    // (L N_t - (L + N_t) k) / (L N_t). Can be negative for large k.
    double overhead_reduction_ad(std::size_t n_taps, std::size_t n_t, std::size_t k);
    // (N_SB N_t - (N_SB + N_t) k) / (N_SB N_t)
    double overhead_reduction_ev(std::size_t n_sb, std::size_t n_t, std::size_t k);

    struct feedback_schedule
    {
        double tau_p_s = 5e-3;       // CSI reporting periodicity
        std::uint64_t k_refresh = 1; // transform refresh period tau_r = k_refresh * tau_p
        unsigned q_bits = 8;

        void validate() const;
    };

    struct feedback_bits_result
    {
        double mean_bits = 0.0;     // average bits per report, transform cost amortized
        std::uint64_t ceil_bits = 0; // smallest integer >= mean_bits
    };

    // B_T = (B_C + B_R / k_refresh) * 2Q with
    //   AD: B_C = L k,   B_R = k N_t
    //   EV: B_C = N_t k, B_R = k N_SB
    // `rows` is L for AD and N_SB for EV.
    feedback_bits_result feedback_bits(mode m, std::size_t rows, std::size_t n_t, std::size_t k,
                                       const feedback_schedule &schedule);

    // Both display conventions for a fraction rendered as a percentage.
    struct percent_display
    {
        int rounded = 0; // round half away from zero of 100 x
        int floored = 0; // floor of 100 x
    };

    percent_display display_percent(double x);

    // True when `printed` equals either convention for x.
    bool matches_either_convention(int printed, double x);
}

#endif

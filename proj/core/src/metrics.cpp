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

#include "csipca/metrics.hpp"
#include "csipca/errors.hpp"

#include <algorithm>
#include <cmath>

namespace csipca
{
    const char *to_string(gcs_variant v)
    {
        return v == gcs_variant::vectorized ? "vectorized" : "per-column-mean";
    }

    gcs_variant parse_gcs_variant(std::string_view text)
    {
        if (text == "vectorized")
            return gcs_variant::vectorized;
        if (text == "per-column-mean")
            return gcs_variant::per_column_mean;
        throw config_error("gcs: expected 'vectorized' or 'per-column-mean', got '" + std::string(text) + "'");
    }

    namespace
    {
        struct cosine_terms
        {
            cplx inner{0.0, 0.0};
            double est2 = 0.0;
            double ref2 = 0.0;
        };

        template <typename A, typename B>
        void accumulate(cosine_terms &t, const A &est, const B &ref)
        {
            for (Eigen::Index j = 0; j < est.cols(); ++j)
                for (Eigen::Index i = 0; i < est.rows(); ++i)
                {
                    const cplx e = est(i, j);
                    const cplx r = ref(i, j);
                    t.inner += std::conj(e) * r;
                    t.est2 += std::norm(e);
                    t.ref2 += std::norm(r);
                }
        }

        double cosine(const cosine_terms &t)
        {
            if (t.est2 == 0.0)
                return 0.0;
            return std::min(1.0, std::abs(t.inner) / std::sqrt(t.est2 * t.ref2));
        }
    }

    double gcs(const cmat &estimate, const cmat &reference, gcs_variant variant)
    {
        if (estimate.rows() != reference.rows() || estimate.cols() != reference.cols())
            throw input_error("gcs: shape mismatch");
        if (reference.size() == 0)
            throw input_error("gcs: empty matrices");

        if (variant == gcs_variant::vectorized)
        {
            cosine_terms t;
            accumulate(t, estimate, reference);
            if (!(t.ref2 > 0.0))
                throw degenerate_input_error("gcs: zero reference");
            return cosine(t);
        }

        double sum = 0.0;
        for (Eigen::Index j = 0; j < reference.cols(); ++j)
        {
            cosine_terms t;
            accumulate(t, estimate.col(j), reference.col(j));
            if (!(t.ref2 > 0.0))
                throw degenerate_input_error("gcs: zero reference column " + std::to_string(j));
            sum += cosine(t);
        }
        return sum / static_cast<double>(reference.cols());
    }

    double overhead_reduction_ad(std::size_t n_taps, std::size_t n_t, std::size_t k)
    {
        if (n_taps < 1 || n_t < 1 || k < 1 || k > n_t)
            throw input_error("overhead_reduction_ad: need L >= 1 and 1 <= k <= N_t");
        const double full = static_cast<double>(n_taps * n_t);
        return (full - static_cast<double>((n_taps + n_t) * k)) / full;
    }

    double overhead_reduction_ev(std::size_t n_sb, std::size_t n_t, std::size_t k)
    {
        if (n_sb < 1 || n_t < 1 || k < 1 || k > n_sb)
            throw input_error("overhead_reduction_ev: need N_t >= 1 and 1 <= k <= N_SB");
        const double full = static_cast<double>(n_sb * n_t);
        return (full - static_cast<double>((n_sb + n_t) * k)) / full;
    }

    void feedback_schedule::validate() const
    {
        if (!(tau_p_s > 0.0) || !std::isfinite(tau_p_s))
            throw input_error("feedback_schedule: tau_p must be finite and > 0");
        if (k_refresh < 1)
            throw input_error("feedback_schedule: k_refresh must be >= 1");
        if (q_bits < 1)
            throw input_error("feedback_schedule: q_bits must be >= 1");
    }

    feedback_bits_result feedback_bits(mode m, std::size_t rows, std::size_t n_t, std::size_t k,
                                       const feedback_schedule &schedule)
    {
        schedule.validate();
        if (rows < 1 || n_t < 1 || k < 1)
            throw input_error("feedback_bits: dimensions and k must be >= 1");

        // Exact rational: bits = numerator / k_refresh.
        const std::uint64_t compressed = m == mode::angular_delay ? rows * k : n_t * k;
        const std::uint64_t transform = m == mode::angular_delay ? k * n_t : k * rows;
        const std::uint64_t two_q = 2ull * schedule.q_bits;
        const std::uint64_t numerator = (compressed * schedule.k_refresh + transform) * two_q;

        feedback_bits_result out;
        out.mean_bits = static_cast<double>(numerator) / static_cast<double>(schedule.k_refresh);
        out.ceil_bits = (numerator + schedule.k_refresh - 1) / schedule.k_refresh;
        return out;
    }

    percent_display display_percent(double x)
    {
        if (!std::isfinite(x))
            throw input_error("display_percent: non-finite value");
        const double pct = 100.0 * x;
        // Values a few ulps under an integer (0.29 * 100 = 28.999...) belong to that integer.
        const double nudge = 1e-9;
        percent_display d;
        d.rounded = static_cast<int>(std::round(pct));
        d.floored = static_cast<int>(std::floor(pct + nudge));
        return d;
    }

    bool matches_either_convention(int printed, double x)
    {
        const auto d = display_percent(x);
        return printed == d.rounded || printed == d.floored;
    }
}

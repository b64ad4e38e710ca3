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

#include "csipca/xforms.hpp"
#include "csipca/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace csipca
{
    const char *to_string(tap_policy p)
    {
        return p == tap_policy::top_energy ? "top-energy" : "first-L";
    }

    tap_policy parse_tap_policy(std::string_view text)
    {
        if (text == "top-energy")
            return tap_policy::top_energy;
        if (text == "first-L" || text == "first-l")
            return tap_policy::first_l;
        throw config_error("tap_policy: expected 'top-energy' or 'first-L', got '" + std::string(text) + "'");
    }

    void tap_channel::validate() const
    {
        if (static_cast<std::size_t>(data.rows()) != tap_indices.size())
            throw input_error("tap_channel: row count does not match tap index count");
        if (tap_indices.size() > n_full)
            throw input_error("tap_channel: more taps than rows in the full matrix");
        for (std::size_t i = 0; i < tap_indices.size(); ++i)
        {
            if (tap_indices[i] >= n_full)
                throw input_error("tap_channel: tap index out of range");
            if (i > 0 && tap_indices[i] <= tap_indices[i - 1])
                throw input_error("tap_channel: tap indices must be strictly increasing");
        }
    }

    std::shared_ptr<const cmat> unitary_dft(std::size_t n)
    {
        if (n == 0)
            throw input_error("unitary_dft: size must be > 0");
        static std::mutex mutex;
        static std::map<std::size_t, std::shared_ptr<const cmat>> cache;
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;

        const auto dim = static_cast<Eigen::Index>(n);
        auto f = std::make_shared<cmat>(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (Eigen::Index r = 0; r < dim; ++r)
            for (Eigen::Index c = 0; c < dim; ++c)
            {
                // reduce r*c mod n first so the angle stays small and exact
                const auto k = static_cast<double>((static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) % n);
                (*f)(r, c) = std::polar(scale, -2.0 * std::numbers::pi * k / static_cast<double>(n));
            }
        cache.emplace(n, f);
        return f;
    }

    angular_delay to_angular_delay(const cfr &h)
    {
        h.validate();
        const auto f_d = unitary_dft(h.n_subcarriers());
        const auto f_a = unitary_dft(h.n_ports());
        angular_delay out;
        out.data.noalias() = (*f_d) * h.data * f_a->adjoint();
        out.subcarrier_spacing_hz = h.subcarrier_spacing_hz;
        out.sample_id = h.sample_id;
        return out;
    }

    cfr from_angular_delay(const angular_delay &h_ad)
    {
        if (h_ad.data.rows() == 0 || h_ad.data.cols() == 0)
            throw input_error("from_angular_delay: empty matrix");
        const auto f_d = unitary_dft(static_cast<std::size_t>(h_ad.data.rows()));
        const auto f_a = unitary_dft(static_cast<std::size_t>(h_ad.data.cols()));
        cfr out;
        out.data.noalias() = f_d->adjoint() * h_ad.data * (*f_a);
        out.subcarrier_spacing_hz = h_ad.subcarrier_spacing_hz;
        out.sample_id = h_ad.sample_id;
        return out;
    }

    tap_channel select_taps(const angular_delay &h_ad, std::size_t n_taps, tap_policy policy)
    {
        const auto n = static_cast<std::size_t>(h_ad.data.rows());
        if (n_taps < 1 || n_taps > n)
            throw input_error("select_taps: L = " + std::to_string(n_taps) + " outside [1, " + std::to_string(n) + "]");

        std::vector<std::size_t> keep(n_taps);
        if (policy == tap_policy::first_l)
        {
            std::iota(keep.begin(), keep.end(), std::size_t{0});
        }
        else
        {
            std::vector<double> energy(n);
            for (std::size_t r = 0; r < n; ++r)
                energy[r] = h_ad.data.row(static_cast<Eigen::Index>(r)).squaredNorm();
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return energy[a] > energy[b]; });
            std::copy_n(order.begin(), n_taps, keep.begin());
            std::sort(keep.begin(), keep.end());
        }

        tap_channel t;
        t.n_full = n;
        t.tap_indices = keep;
        t.data.resize(static_cast<Eigen::Index>(n_taps), h_ad.data.cols());
        for (std::size_t i = 0; i < n_taps; ++i)
            t.data.row(static_cast<Eigen::Index>(i)) = h_ad.data.row(static_cast<Eigen::Index>(keep[i]));
        return t;
    }

    angular_delay embed_taps(const tap_channel &t, double subcarrier_spacing_hz, std::uint64_t sample_id)
    {
        t.validate();
        angular_delay out;
        out.data = cmat::Zero(static_cast<Eigen::Index>(t.n_full), t.data.cols());
        for (std::size_t i = 0; i < t.tap_indices.size(); ++i)
            out.data.row(static_cast<Eigen::Index>(t.tap_indices[i])) = t.data.row(static_cast<Eigen::Index>(i));
        out.subcarrier_spacing_hz = subcarrier_spacing_hz;
        out.sample_id = sample_id;
        return out;
    }

    cfr from_tap_channel(const tap_channel &t, double subcarrier_spacing_hz, std::uint64_t sample_id)
    {
        t.validate();
        const auto f_d = unitary_dft(t.n_full);
        const auto f_a = unitary_dft(static_cast<std::size_t>(t.data.cols()));
        cmat basis(static_cast<Eigen::Index>(t.n_full), static_cast<Eigen::Index>(t.n_taps()));
        for (std::size_t i = 0; i < t.n_taps(); ++i)
            basis.col(static_cast<Eigen::Index>(i)) = f_d->row(static_cast<Eigen::Index>(t.tap_indices[i])).adjoint();
        cfr out;
        out.data.noalias() = basis * t.data * (*f_a);
        out.subcarrier_spacing_hz = subcarrier_spacing_hz;
        out.sample_id = sample_id;
        return out;
    }

    std::vector<crow> subband_average(const cfr &h, std::size_t n_sb)
    {
        const auto n = h.n_subcarriers();
        if (n_sb == 0 || n % n_sb != 0)
            throw input_error("subband_average: N = " + std::to_string(n) + " is not divisible by N_SB = " +
                              std::to_string(n_sb));
        const auto width = static_cast<Eigen::Index>(n / n_sb);
        std::vector<crow> out;
        out.reserve(n_sb);
        for (std::size_t k = 0; k < n_sb; ++k)
            out.push_back(h.data.middleRows(static_cast<Eigen::Index>(k) * width, width).colwise().mean());
        return out;
    }

    ev_matrix subband_eigenvectors(std::span<const crow> subbands)
    {
        if (subbands.empty())
            throw input_error("subband_eigenvectors: no sub-bands");
        const auto n_t = subbands.front().size();
        ev_matrix ev;
        ev.data.resize(n_t, static_cast<Eigen::Index>(subbands.size()));
        for (std::size_t k = 0; k < subbands.size(); ++k)
        {
            const auto &h = subbands[k];
            if (h.size() != n_t)
                throw input_error("subband_eigenvectors: sub-band vectors differ in length");
            const double norm = h.norm();
            if (!(norm > 0.0))
                throw degenerate_input_error("subband_eigenvectors: sub-band " + std::to_string(k) + " is all zero");
            // h^H h is rank one with eigenvector h^H / |h| and eigenvalue |h|^2.
            auto col = ev.data.col(static_cast<Eigen::Index>(k));
            col = h.adjoint() / norm;
            normalize_phase(col);
        }
        return ev;
    }
}

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

#ifndef CSIPCA_CHANFORGE_HPP
#define CSIPCA_CHANFORGE_HPP

#include "csipca/types.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csipca
{
    class key_value_file;

    // Planar antenna panel. Ports map one-to-one onto elements in row-major order with the
    // polarization index running fastest: port = (row * cols + col) * polarizations + pol.
    struct array_geometry
    {
        std::size_t rows = 2;
        std::size_t cols = 8;
        std::size_t polarizations = 2;
        double element_spacing = 0.5; // in wavelengths

        std::size_t n_ports() const { return rows * cols * polarizations; }
        void validate() const;
        bool operator==(const array_geometry &) const = default;
    };

    // Parses "RxCxP" (e.g. "2x8x2").
    array_geometry parse_panel(std::string_view text, double element_spacing = 0.5);

    struct multipath_profile
    {
        std::string name;
        std::vector<double> path_delays_s;   // nondecreasing
        std::vector<double> path_powers_db;
        std::vector<double> azimuth_aod_deg;
        std::vector<double> zenith_aod_deg;
        double angular_spread_deg = 0.0;     // std-dev of the per-path angle jitter

        std::size_t n_paths() const { return path_delays_s.size(); }
        void validate() const;

        // Linear path powers normalized to sum to one.
        std::vector<double> linear_powers() const;

        bool operator==(const multipath_profile &) const = default;
    };

    // Stock profiles: "low-spread-30ns" (5 paths) and "high-spread-300ns" (25 paths).
    std::vector<std::string> stock_profile_names();
    multipath_profile stock_profile(std::string_view name);

    // Profile config file: name, delays_ns, powers_db, azimuth_deg, zenith_deg, angular_spread_deg.
    multipath_profile parse_profile(const key_value_file &kv);
    multipath_profile load_profile(const std::filesystem::path &path);

    // Stock name or path to a profile file. Relative paths resolve against `base_dir`.
    multipath_profile resolve_profile(std::string_view name_or_path, const std::filesystem::path &base_dir = {});

    struct tap
    {
        double delay_s = 0.0;
        cvec gain; // length N_t
    };

    // Unit-norm planar-array response. Element (r, c) has phase
    //   2*pi*spacing * (c * sin(zenith) * sin(azimuth) + r * cos(zenith)),
    // so azimuth 0 / zenith 90 deg is broadside. Entries are scaled by 1/sqrt(N_t).
    cvec steering_vector(const array_geometry &geometry, double azimuth_deg, double zenith_deg);

    // One tap per path: sqrt(p) * CN(0,1) * steering(angles + N(0, spread) jitter).
    std::vector<tap> generate_cir(const multipath_profile &profile, const array_geometry &geometry, std::uint64_t seed);

    // Spatial-frequency channel matrix H_f (N subcarriers x N_t ports).
    struct cfr
    {
        cmat data;
        double subcarrier_spacing_hz = 15e3;
        std::uint64_t sample_id = 0;

        std::size_t n_subcarriers() const { return static_cast<std::size_t>(data.rows()); }
        std::size_t n_ports() const { return static_cast<std::size_t>(data.cols()); }
        void validate() const;
    };

    // H_f[s, t] = sum_p gain_p[t] * exp(-j 2 pi s scs delay_p)
    cfr cir_to_cfr(std::span<const tap> taps, std::size_t n_subcarriers, double scs_hz, std::uint64_t sample_id = 0);

    struct dataset_meta
    {
        std::uint64_t config_hash = 0;
        std::uint64_t seed = 0;
    };

    struct dataset
    {
        std::size_t n_subcarriers = 0;
        std::size_t n_ports = 0;
        double subcarrier_spacing_hz = 15e3;
        std::vector<cfr> samples;
        dataset_meta meta;

        // Shared dimensions, strictly increasing sample ids starting at 0, finite entries.
        void validate() const;
    };

    struct generator_config
    {
        std::string profile = "low-spread-30ns";
        std::uint64_t seed = 0;
        std::size_t count = 0;
        std::size_t n_subcarriers = 624;
        double subcarrier_spacing_hz = 15e3;
        array_geometry geometry{};

        void validate() const;
        // FNV-1a over the canonical key/value text (profile contents included).
        std::uint64_t hash(const multipath_profile &profile) const;
    };

    generator_config parse_generator_config(const key_value_file &kv);

    // Per-sample seed derived from (dataset seed, sample id).
    std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample_id);

    cfr generate_sample(const generator_config &cfg, const multipath_profile &profile, std::uint64_t sample_id);
    dataset generate_dataset(const generator_config &cfg, const multipath_profile &profile);
}

#endif

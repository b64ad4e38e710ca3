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

#ifndef CSIPCA_EXPERIMENT_HPP
#define CSIPCA_EXPERIMENT_HPP

#include "csipca/chanforge.hpp"
#include "csipca/metrics.hpp"
#include "csipca/pca.hpp"
#include "csipca/xforms.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace csipca
{
    class key_value_file;

    enum class dataset_source
    {
        generate,
        load
    };

    // One experiment: where the data comes from, which pipeline, and the (k, Q) sweep.
    //
    // Config keys (plain-text key = value):
    //   name, source (generate|load), profile, seed, count, dataset, subcarriers, scs_hz,
    //   panel, element_spacing, pipeline (AD|EV), taps, tap_policy, subbands, components,
    //   quant (list of bit widths and/or "off"), gcs, k_refresh, tau_p_s,
    //   variance_threshold, out_dir, refs
    struct experiment_config
    {
        std::string name = "experiment";
        dataset_source source = dataset_source::generate;
        std::string profile = "low-spread-30ns";
        std::uint64_t seed = 0;
        std::size_t count = 100;
        std::filesystem::path dataset_path;
        std::size_t n_subcarriers = 624;
        double subcarrier_spacing_hz = 15e3;
        array_geometry geometry{};

        mode pipeline = mode::angular_delay;
        std::size_t taps = 25;
        tap_policy policy = tap_policy::top_energy;
        std::size_t subbands = 13;
        std::vector<std::size_t> components{1, 2, 3};
        std::vector<std::optional<unsigned>> quant{std::nullopt};
        gcs_variant variant = gcs_variant::vectorized;
        std::uint64_t k_refresh = 1;
        double tau_p_s = 5e-3;
        double variance_threshold = 0.99;

        std::filesystem::path out_dir = "results";
        std::filesystem::path refs;
        std::filesystem::path base_dir; // directory of the config file, for relative paths

        // Checks that do not need the data. Throws config_error naming the field.
        void validate() const;
        generator_config generator() const;
    };

    experiment_config parse_experiment_config(const key_value_file &kv, const std::filesystem::path &base_dir = {});
    experiment_config load_experiment_config(const std::filesystem::path &path);

    // Generates or loads the configured dataset.
    dataset resolve_dataset(const experiment_config &cfg);
    std::string dataset_id(const experiment_config &cfg);

    // Throws data_error when the dataset cannot serve the config (L > N, N_SB does not divide N,
    // k beyond the basis size, port count mismatch with a generated config).
    void check_dataset(const experiment_config &cfg, const dataset &ds);

    // The matrix PCA runs on for one sample: H_tL (AD) or H_EV (EV).
    struct pipeline_input
    {
        cmat matrix;
        tap_channel taps; // AD only
    };

    pipeline_input prepare_sample(const experiment_config &cfg, const cfr &h);

    struct result_row
    {
        mode pipeline = mode::angular_delay;
        std::size_t rows = 0; // L or N_SB
        std::size_t n_t = 0;
        std::size_t k = 0;
        std::optional<unsigned> q_bits;
        gcs_variant variant = gcs_variant::vectorized;
        double gcs_mean = 0.0;
        double gcs_p05 = 0.0;
        double gcs_p50 = 0.0;
        double gcs_p95 = 0.0;
        std::optional<double> gcs_taps_mean; // AD: GCS on H_tL, tap truncation excluded
        double overhead = 0.0;
        int overhead_round = 0;
        int overhead_floor = 0;
        std::optional<feedback_bits_result> bits; // only for quantized rows
        std::size_t samples = 0;
        std::string dataset;
        std::optional<double> audit_max_dev; // |GCS - sqrt(cumulative variance)| on the audit subset
    };

    inline constexpr std::size_t audit_samples = 10;
    inline constexpr double audit_tolerance = 1e-9;

    // Runs every (k, Q) pair over all samples in sample order. Unquantized vectorized rows are
    // audited against the singular-value identity on the first audit_samples samples; a
    // violation throws std::logic_error.
    std::vector<result_row> run_experiment(const experiment_config &cfg, const dataset &ds);
    std::vector<result_row> run_experiment(const experiment_config &cfg);

    std::string results_csv(const std::vector<result_row> &rows);
    std::vector<result_row> parse_results_csv(std::istream &in);

    struct spectrum_row
    {
        std::size_t k = 0;
        double mean_pct = 0.0;             // mean share of variance carried by component k
        double cum_pct = 0.0;              // running sum of mean_pct
        double frac_samples_covered = 0.0; // samples whose choose_components(threshold) <= k
    };

    // Per-sample explained-variance fractions, each summing to 1.
    std::vector<std::vector<double>> sample_variance_fractions(const experiment_config &cfg, const dataset &ds);
    std::vector<spectrum_row> variance_spectrum(const experiment_config &cfg, const dataset &ds);
    std::string spectrum_csv(const std::vector<spectrum_row> &rows);

    // Published neural-network numbers shown next to live PCA rows. Never computed here.
    struct reference_constant
    {
        mode pipeline = mode::angular_delay;
        std::string model;
        std::string dataset;
        double gcs = 0.0;
        int overhead_pct = 0;
    };

    inline constexpr const char *reference_label = "published reference, not reproduced";

    // CSV lines "pipeline,model,dataset,gcs,overhead_pct"; '#' comments and a header line allowed.
    std::vector<reference_constant> parse_reference_constants(std::istream &in);
    std::vector<reference_constant> load_reference_constants(const std::filesystem::path &path);

    std::string emit_comparison_table(const std::vector<result_row> &rows, const std::vector<reference_constant> &refs);

    // Linear-interpolation percentile (p in [0, 100]) of an unsorted sample.
    double percentile(std::vector<double> values, double p);
}

#endif

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

#include "csipca/experiment.hpp"
#include "csipca/dataset_io.hpp"
#include "csipca/errors.hpp"
#include "csipca/keyvalue.hpp"
#include "csipca/quant.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace csipca
{
    void experiment_config::validate() const
    {
        if (components.empty())
            throw config_error("config field 'components': list must not be empty");
        if (quant.empty())
            throw config_error("config field 'quant': list must not be empty");
        for (auto k : components)
            if (k < 1)
                throw config_error("config field 'components': values must be >= 1");
        for (const auto &q : quant)
            if (q && (*q < 1 || *q > max_q_bits))
                throw config_error("config field 'quant': bit widths must lie in [1, 32]");
        if (n_subcarriers < 1)
            throw config_error("config field 'subcarriers': must be >= 1");
        if (!(subcarrier_spacing_hz > 0.0))
            throw config_error("config field 'scs_hz': must be > 0");
        if (pipeline == mode::angular_delay)
        {
            if (taps < 1 || taps > n_subcarriers)
                throw config_error("config field 'taps': L = " + std::to_string(taps) + " must lie in [1, N = " +
                                   std::to_string(n_subcarriers) + "]");
        }
        else if (subbands < 1 || n_subcarriers % subbands != 0)
        {
            throw config_error("config field 'subbands': N_SB = " + std::to_string(subbands) +
                               " must divide N = " + std::to_string(n_subcarriers));
        }
        if (!(variance_threshold > 0.0 && variance_threshold <= 1.0))
            throw config_error("config field 'variance_threshold': must lie in (0, 1]");
        if (k_refresh < 1)
            throw config_error("config field 'k_refresh': must be >= 1");
        if (!(tau_p_s > 0.0))
            throw config_error("config field 'tau_p_s': must be > 0");
        if (source == dataset_source::load && dataset_path.empty())
            throw config_error("config field 'dataset': required when source = load");
        if (source == dataset_source::generate && count < 1)
            throw config_error("config field 'count': must be >= 1");
    }

    generator_config experiment_config::generator() const
    {
        generator_config g;
        g.profile = profile;
        g.seed = seed;
        g.count = count;
        g.n_subcarriers = n_subcarriers;
        g.subcarrier_spacing_hz = subcarrier_spacing_hz;
        g.geometry = geometry;
        return g;
    }

    experiment_config parse_experiment_config(const key_value_file &kv, const std::filesystem::path &base_dir)
    {
        static const std::set<std::string, std::less<>> known = {
            "name", "source", "profile", "seed", "count", "dataset", "subcarriers", "scs_hz", "panel",
            "element_spacing", "pipeline", "taps", "tap_policy", "subbands", "components", "quant", "gcs",
            "k_refresh", "tau_p_s", "variance_threshold", "out_dir", "refs"};
        if (auto unknown = kv.unknown_keys(known); !unknown.empty())
            throw config_error(kv.source() + ": unknown config field '" + unknown.front() + "'");

        experiment_config cfg;
        cfg.base_dir = base_dir;
        cfg.name = kv.get_string("name", cfg.name);

        const auto source = kv.get_string("source", "generate");
        if (source == "generate")
            cfg.source = dataset_source::generate;
        else if (source == "load")
            cfg.source = dataset_source::load;
        else
            throw config_error("config field 'source': expected 'generate' or 'load', got '" + source + "'");

        cfg.profile = kv.get_string("profile", cfg.profile);
        cfg.seed = kv.get_uint("seed", cfg.seed);
        cfg.count = kv.get_uint("count", cfg.count);
        if (kv.has("dataset"))
        {
            cfg.dataset_path = kv.get_string("dataset");
            if (cfg.dataset_path.is_relative() && !base_dir.empty())
                cfg.dataset_path = base_dir / cfg.dataset_path;
        }
        cfg.n_subcarriers = kv.get_uint("subcarriers", cfg.n_subcarriers);
        cfg.subcarrier_spacing_hz = kv.get_double("scs_hz", cfg.subcarrier_spacing_hz);
        cfg.geometry = parse_panel(kv.get_string("panel", "2x8x2"), kv.get_double("element_spacing", 0.5));

        const auto pipeline = kv.get_string("pipeline", "AD");
        if (pipeline == "AD")
            cfg.pipeline = mode::angular_delay;
        else if (pipeline == "EV")
            cfg.pipeline = mode::eigenvector;
        else
            throw config_error("config field 'pipeline': expected 'AD' or 'EV', got '" + pipeline + "'");

        cfg.taps = kv.get_uint("taps", cfg.taps);
        cfg.policy = parse_tap_policy(kv.get_string("tap_policy", "top-energy"));
        cfg.subbands = kv.get_uint("subbands", cfg.subbands);
        if (kv.has("components"))
        {
            cfg.components.clear();
            for (auto k : kv.get_uint_list("components"))
                cfg.components.push_back(static_cast<std::size_t>(k));
        }
        if (kv.has("quant"))
        {
            cfg.quant.clear();
            for (const auto &item : kv.get_string_list("quant"))
            {
                if (item == "off")
                {
                    cfg.quant.emplace_back(std::nullopt);
                    continue;
                }
                key_value_file one;
                one.set("quant", item);
                cfg.quant.emplace_back(static_cast<unsigned>(one.get_uint("quant")));
            }
        }
        cfg.variant = parse_gcs_variant(kv.get_string("gcs", "vectorized"));
        cfg.k_refresh = kv.get_uint("k_refresh", cfg.k_refresh);
        cfg.tau_p_s = kv.get_double("tau_p_s", cfg.tau_p_s);
        cfg.variance_threshold = kv.get_double("variance_threshold", cfg.variance_threshold);
        if (kv.has("out_dir"))
            cfg.out_dir = kv.get_string("out_dir");
        if (kv.has("refs"))
        {
            cfg.refs = kv.get_string("refs");
            if (cfg.refs.is_relative() && !base_dir.empty())
                cfg.refs = base_dir / cfg.refs;
        }
        cfg.validate();
        return cfg;
    }

    experiment_config load_experiment_config(const std::filesystem::path &path)
    {
        return parse_experiment_config(key_value_file::load(path), path.parent_path());
    }

    dataset resolve_dataset(const experiment_config &cfg)
    {
        if (cfg.source == dataset_source::load)
            return load_dataset(cfg.dataset_path);
        const auto profile = resolve_profile(cfg.profile, cfg.base_dir);
        return generate_dataset(cfg.generator(), profile);
    }

    std::string dataset_id(const experiment_config &cfg)
    {
        if (cfg.source == dataset_source::load)
            return "file:" + cfg.dataset_path.filename().string();
        return "gen:" + std::filesystem::path(cfg.profile).stem().string() + ":seed" + std::to_string(cfg.seed) +
               ":n" + std::to_string(cfg.count);
    }

    namespace
    {
        std::size_t basis_size(const experiment_config &cfg, std::size_t n_ports)
        {
            return cfg.pipeline == mode::angular_delay ? std::min(cfg.taps, n_ports) : std::min(n_ports, cfg.subbands);
        }
    }

    void check_dataset(const experiment_config &cfg, const dataset &ds)
    {
        ds.validate();
        const auto n = ds.n_subcarriers;
        if (cfg.source == dataset_source::generate &&
            (n != cfg.n_subcarriers || ds.n_ports != cfg.geometry.n_ports()))
            throw data_error("dataset shape " + std::to_string(n) + "x" + std::to_string(ds.n_ports) +
                             " does not match the configured " + std::to_string(cfg.n_subcarriers) + "x" +
                             std::to_string(cfg.geometry.n_ports()));
        if (cfg.pipeline == mode::angular_delay && cfg.taps > n)
            throw data_error("taps: L = " + std::to_string(cfg.taps) + " exceeds N = " + std::to_string(n));
        if (cfg.pipeline == mode::eigenvector && n % cfg.subbands != 0)
            throw data_error("subbands: N_SB = " + std::to_string(cfg.subbands) + " does not divide N = " +
                             std::to_string(n));
        const auto k_max = basis_size(cfg, ds.n_ports);
        for (auto k : cfg.components)
            if (k > k_max)
                throw data_error("components: k = " + std::to_string(k) + " exceeds the basis size " +
                                 std::to_string(k_max));
    }

    pipeline_input prepare_sample(const experiment_config &cfg, const cfr &h)
    {
        pipeline_input in;
        if (cfg.pipeline == mode::angular_delay)
        {
            in.taps = select_taps(to_angular_delay(h), cfg.taps, cfg.policy);
            in.matrix = in.taps.data;
        }
        else
        {
            const auto sb = subband_average(h, cfg.subbands);
            in.matrix = subband_eigenvectors(sb).data;
        }
        return in;
    }

    double percentile(std::vector<double> values, double p)
    {
        if (values.empty())
            throw input_error("percentile: empty sample");
        std::sort(values.begin(), values.end());
        const double pos = std::clamp(p, 0.0, 100.0) / 100.0 * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    }

    std::vector<result_row> run_experiment(const experiment_config &cfg, const dataset &ds)
    {
        cfg.validate();
        check_dataset(cfg, ds);
        const bool ad = cfg.pipeline == mode::angular_delay;
        const auto n_t = ds.n_ports;
        const auto dim_rows = ad ? cfg.taps : cfg.subbands;
        const auto n_pairs = cfg.components.size() * cfg.quant.size();

        std::vector<std::vector<double>> scores(n_pairs), tap_scores(n_pairs);
        std::vector<double> audit(n_pairs, 0.0);

        for (std::size_t s = 0; s < ds.samples.size(); ++s)
        {
            const auto &h = ds.samples[s];
            const auto input = prepare_sample(cfg, h);
            const auto basis = pca_fit(input.matrix, cfg.pipeline);
            const bool audited = s < audit_samples;
            std::vector<double> fractions;
            if (audited)
                fractions = basis.explained_variance();

            for (std::size_t ki = 0; ki < cfg.components.size(); ++ki)
            {
                const auto k = cfg.components[ki];
                auto report = compress(input.matrix, basis, k);
                if (ad)
                {
                    report.tap_indices = input.taps.tap_indices;
                    report.n_full = input.taps.n_full;
                }
                for (std::size_t qi = 0; qi < cfg.quant.size(); ++qi)
                {
                    const auto slot = ki * cfg.quant.size() + qi;
                    const auto &q = cfg.quant[qi];
                    const auto sent = q ? quantize_report(report, *q) : report;
                    const cmat rebuilt = reconstruct(sent);

                    double representation_gcs = 0.0;
                    if (ad)
                    {
                        representation_gcs = gcs(rebuilt, input.matrix, cfg.variant);
                        tap_scores[slot].push_back(representation_gcs);
                        const auto h_hat = from_tap_channel(reconstruct_taps(sent), h.subcarrier_spacing_hz, h.sample_id);
                        scores[slot].push_back(gcs(h_hat.data, h.data, cfg.variant));
                    }
                    else
                    {
                        representation_gcs = gcs(rebuilt, input.matrix, cfg.variant);
                        scores[slot].push_back(representation_gcs);
                    }

                    if (audited && !q && cfg.variant == gcs_variant::vectorized)
                    {
                        double cumulative = 0.0;
                        for (std::size_t i = 0; i < k; ++i)
                            cumulative += fractions[i];
                        const double dev = std::abs(representation_gcs - std::sqrt(std::min(1.0, cumulative)));
                        audit[slot] = std::max(audit[slot], dev);
                        if (dev > audit_tolerance)
                            throw std::logic_error("audit failed: sample " + std::to_string(h.sample_id) + ", k = " +
                                                   std::to_string(k) + ", |GCS - sqrt(cumulative variance)| = " +
                                                   std::to_string(dev));
                    }
                }
            }
        }

        const auto id = dataset_id(cfg);
        std::vector<result_row> rows;
        for (std::size_t ki = 0; ki < cfg.components.size(); ++ki)
            for (std::size_t qi = 0; qi < cfg.quant.size(); ++qi)
            {
                const auto slot = ki * cfg.quant.size() + qi;
                const auto k = cfg.components[ki];
                result_row row;
                row.pipeline = cfg.pipeline;
                row.rows = dim_rows;
                row.n_t = n_t;
                row.k = k;
                row.q_bits = cfg.quant[qi];
                row.variant = cfg.variant;
                row.samples = ds.samples.size();
                row.dataset = id;
                const auto &v = scores[slot];
                if (!v.empty())
                {
                    double sum = 0.0;
                    for (double x : v)
                        sum += x;
                    row.gcs_mean = sum / static_cast<double>(v.size());
                    row.gcs_p05 = percentile(v, 5.0);
                    row.gcs_p50 = percentile(v, 50.0);
                    row.gcs_p95 = percentile(v, 95.0);
                }
                if (ad && !tap_scores[slot].empty())
                {
                    double sum = 0.0;
                    for (double x : tap_scores[slot])
                        sum += x;
                    row.gcs_taps_mean = sum / static_cast<double>(tap_scores[slot].size());
                }
                row.overhead = ad ? overhead_reduction_ad(dim_rows, n_t, k) : overhead_reduction_ev(dim_rows, n_t, k);
                const auto shown = display_percent(row.overhead);
                row.overhead_round = shown.rounded;
                row.overhead_floor = shown.floored;
                if (row.q_bits)
                    row.bits = feedback_bits(cfg.pipeline, dim_rows, n_t, k, {cfg.tau_p_s, cfg.k_refresh, *row.q_bits});
                if (!row.q_bits && cfg.variant == gcs_variant::vectorized && !ds.samples.empty())
                    row.audit_max_dev = audit[slot];
                rows.push_back(std::move(row));
            }
        return rows;
    }

    std::vector<result_row> run_experiment(const experiment_config &cfg)
    {
        return run_experiment(cfg, resolve_dataset(cfg));
    }

    std::vector<std::vector<double>> sample_variance_fractions(const experiment_config &cfg, const dataset &ds)
    {
        cfg.validate();
        check_dataset(cfg, ds);
        std::vector<std::vector<double>> out;
        out.reserve(ds.samples.size());
        for (const auto &h : ds.samples)
            out.push_back(pca_fit(prepare_sample(cfg, h).matrix, cfg.pipeline).explained_variance());
        return out;
    }

    std::vector<spectrum_row> variance_spectrum(const experiment_config &cfg, const dataset &ds)
    {
        cfg.validate();
        check_dataset(cfg, ds);
        const auto k_max = basis_size(cfg, ds.n_ports);
        std::vector<double> mean(k_max, 0.0);
        std::vector<std::size_t> needed_counts(k_max + 1, 0);
        for (const auto &h : ds.samples)
        {
            const auto basis = pca_fit(prepare_sample(cfg, h).matrix, cfg.pipeline);
            const auto fractions = basis.explained_variance();
            for (std::size_t i = 0; i < k_max; ++i)
                mean[i] += fractions[i];
            ++needed_counts[choose_components(basis, cfg.variance_threshold)];
        }
        const double n = static_cast<double>(std::max<std::size_t>(ds.samples.size(), 1));
        std::vector<spectrum_row> rows;
        double cumulative = 0.0;
        std::size_t covered = 0;
        for (std::size_t k = 1; k <= k_max; ++k)
        {
            spectrum_row r;
            r.k = k;
            r.mean_pct = 100.0 * mean[k - 1] / n;
            cumulative += r.mean_pct;
            r.cum_pct = cumulative;
            covered += needed_counts[k];
            r.frac_samples_covered = static_cast<double>(covered) / n;
            rows.push_back(r);
        }
        return rows;
    }
}

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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "csipca/chanforge.hpp"
#include "csipca/dataset_io.hpp"
#include "csipca/experiment.hpp"
#include "csipca/keyvalue.hpp"
#include "csipca/metrics.hpp"
#include "csipca/pca.hpp"
#include "csipca/xforms.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace csipca;
namespace fs = std::filesystem;

namespace
{
    struct outcome
    {
        bool pass = true;
        std::string detail;

        void require(bool ok, const std::string &what)
        {
            if (!ok && pass)
                detail = what;
            pass = pass && ok;
        }
    };

    std::string fmt(const char *f, double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), f, x);
        return buf;
    }

    experiment_config config(const std::string &text)
    {
        std::istringstream in(text);
        return parse_experiment_config(key_value_file::parse(in, "acceptance"));
    }

    // 1. Published overhead percentages.
    outcome overhead_exactness()
    {
        outcome o;
        const std::size_t ad_l[3] = {5, 25, 25};
        const int ad_pct[3][3] = {{77, 93, 93}, {54, 86, 86}, {31, 79, 79}};
        const std::size_t ev_sb[3] = {12, 12, 13};
        const int ev_pct[3][3] = {{89, 89, 89}, {77, 77, 78}, {65, 65, 67}};
        const std::size_t n_t = 32;
        int cells = 0;
        for (std::size_t k = 1; k <= 3; ++k)
            for (int d = 0; d < 3; ++d)
            {
                const double ad = overhead_reduction_ad(ad_l[d], n_t, k);
                const double ad_exact = 1.0 - static_cast<double>(k * (ad_l[d] + n_t)) / static_cast<double>(ad_l[d] * n_t);
                o.require(std::abs(ad - ad_exact) < 1e-12, "AD exact real L=" + std::to_string(ad_l[d]));
                o.require(matches_either_convention(ad_pct[k - 1][d], ad),
                          "AD L=" + std::to_string(ad_l[d]) + " k=" + std::to_string(k) + " printed " +
                              std::to_string(ad_pct[k - 1][d]));
                const double ev = overhead_reduction_ev(ev_sb[d], n_t, k);
                const double ev_exact = 1.0 - static_cast<double>(k * (ev_sb[d] + n_t)) / static_cast<double>(ev_sb[d] * n_t);
                o.require(std::abs(ev - ev_exact) < 1e-12, "EV exact real N_SB=" + std::to_string(ev_sb[d]));
                o.require(matches_either_convention(ev_pct[k - 1][d], ev),
                          "EV N_SB=" + std::to_string(ev_sb[d]) + " k=" + std::to_string(k) + " printed " +
                              std::to_string(ev_pct[k - 1][d]));
                cells += 2;
            }
        if (o.pass)
            o.detail = std::to_string(cells) + " table cells matched";
        return o;
    }

    struct oracle_sweep
    {
        double worst_oracle = 0.0;
        double worst_tail = 0.0;
        double worst_identity = 0.0;
        bool monotone = true;
        int matrices = 0;
    };

    // Shared by criteria 2 and 3: every k on 1000 random matrices.
    const oracle_sweep &sweep()
    {
        static const oracle_sweep result = [] {
            oracle_sweep s;
            std::mt19937_64 rng(20260101);
            const std::pair<Eigen::Index, Eigen::Index> shapes[3] = {{5, 32}, {25, 32}, {32, 13}};
            for (int i = 0; i < 1000; ++i)
            {
                const auto [r, c] = shapes[i % 3];
                const cmat a = oracle::random_matrix(rng, r, c);
                const auto basis = pca_fit(a);
                Eigen::BDCSVD<cmat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
                const auto &sigma = svd.singularValues();
                const double norm = a.norm();
                double prev = 0.0;
                for (std::size_t k = 1; k <= basis.k_max(); ++k)
                {
                    const auto kk = static_cast<Eigen::Index>(k);
                    const cmat rec = reconstruct(compress(a, basis, k));
                    const cmat ref = svd.matrixU().leftCols(kk) * sigma.head(kk).asDiagonal() *
                                     svd.matrixV().leftCols(kk).adjoint();
                    s.worst_oracle = std::max(s.worst_oracle, (rec - ref).norm() / norm);
                    s.worst_tail = std::max(s.worst_tail, std::abs((a - rec).norm() - oracle::tail_energy(sigma, kk)));
                    const double g = gcs(rec, a);
                    const auto ev = basis.explained_variance();
                    double cum = 0.0;
                    for (std::size_t j = 0; j < k; ++j)
                        cum += ev[j];
                    s.worst_identity = std::max(s.worst_identity, std::abs(g - std::sqrt(std::min(1.0, cum))));
                    s.monotone = s.monotone && g >= prev - 1e-12;
                    prev = g;
                }
                ++s.matrices;
            }
            return s;
        }();
        return result;
    }

    // 2. Truncated-SVD equivalence and tail energy.
    outcome oracle_equivalence()
    {
        outcome o;
        const auto &s = sweep();
        o.require(s.matrices == 1000, "matrix count");
        o.require(s.worst_oracle <= 1e-9, "relative Frobenius vs truncated SVD " + fmt("%.3g", s.worst_oracle));
        o.require(s.worst_tail <= 1e-9, "error vs tail energy " + fmt("%.3g", s.worst_tail));
        if (o.pass)
            o.detail = "1000 matrices, all k; max rel dev " + fmt("%.2e", s.worst_oracle) + ", max tail dev " +
                       fmt("%.2e", s.worst_tail);
        return o;
    }

    // 3. GCS equals sqrt of cumulative explained variance, nondecreasing in k.
    outcome gcs_spectrum_identity()
    {
        outcome o;
        const auto &s = sweep();
        o.require(s.worst_identity <= 1e-9, "identity deviation " + fmt("%.3g", s.worst_identity));
        o.require(s.monotone, "GCS decreased with k on some sample");
        if (o.pass)
            o.detail = "max |GCS - sqrt(cum var)| " + fmt("%.2e", s.worst_identity) + ", monotone in k";
        return o;
    }

    // 4. DFT round trip and norm preservation.
    outcome transform_correctness()
    {
        outcome o;
        std::mt19937_64 rng(4);
        double worst_rt = 0.0, worst_norm = 0.0;
        for (auto [r, c] : {std::pair<Eigen::Index, Eigen::Index>{8, 4}, {624, 32}})
            for (int i = 0; i < 100; ++i)
            {
                cfr h;
                h.data = oracle::random_matrix(rng, r, c);
                const auto ad = to_angular_delay(h);
                const auto back = from_angular_delay(ad);
                worst_rt = std::max(worst_rt, oracle::rel_err(back.data, h.data));
                worst_norm = std::max(worst_norm, std::abs(ad.data.norm() - h.data.norm()) / h.data.norm());
            }
        o.require(worst_rt <= 1e-12, "round trip " + fmt("%.3g", worst_rt));
        o.require(worst_norm <= 1e-12, "norm " + fmt("%.3g", worst_norm));
        if (o.pass)
            o.detail = "200 matrices; round trip " + fmt("%.2e", worst_rt) + ", norm " + fmt("%.2e", worst_norm);
        return o;
    }

    // 5. Full-rank pipelines recover their inputs.
    outcome pipeline_ceilings()
    {
        outcome o;
        double worst = 0.0;
        for (const char *profile : {"low-spread-30ns", "high-spread-300ns"})
        {
            const std::string p = std::string("profile = ") + profile + "\nseed = 5\ncount = 20\n";
            const auto ad = run_experiment(config(p + "pipeline = AD\ntaps = 624\ncomponents = 32\n"));
            const auto ev = run_experiment(config(p + "pipeline = EV\nsubbands = 13\ncomponents = 13\n"));
            for (const auto *row : {&ad.front(), &ev.front()})
            {
                worst = std::max({worst, std::abs(row->gcs_mean - 1.0), std::abs(row->gcs_p05 - 1.0)});
                o.require(std::abs(row->gcs_mean - 1.0) <= 1e-9 && std::abs(row->gcs_p05 - 1.0) <= 1e-9,
                          std::string(profile) + " " + to_string(row->pipeline) + " GCS " + fmt("%.12f", row->gcs_mean));
            }
        }
        if (o.pass)
            o.detail = "AD L=N k=N_t and EV k=N_SB; max |GCS - 1| " + fmt("%.2e", worst);
        return o;
    }

    // 6. Few components capture 99% of the variance.
    outcome variance_concentration()
    {
        outcome o;
        const std::string base = "seed = 1\ncount = 1000\n";
        const auto ad_cfg = config(base + "profile = low-spread-30ns\npipeline = AD\ntaps = 5\n");
        const auto ad = variance_spectrum(ad_cfg, resolve_dataset(ad_cfg));
        const double ad_cov = ad[1].frac_samples_covered;
        o.require(ad_cov >= 0.9, "low-spread AD k<=2 covers " + fmt("%.3f", ad_cov));
        std::string detail = "low-spread AD(L=5) k<=2: " + fmt("%.3f", ad_cov);
        for (const char *profile : {"low-spread-30ns", "high-spread-300ns"})
        {
            const auto ds = resolve_dataset(config(base + "profile = " + profile + "\n"));
            for (const char *n_sb : {"12", "13"})
            {
                const auto cfg = config(base + "profile = " + profile + "\npipeline = EV\nsubbands = " + n_sb + "\n");
                const double cov = variance_spectrum(cfg, ds)[2].frac_samples_covered;
                const std::string tag = std::string(profile) + " EV(N_SB=" + n_sb + ") k<=3";
                o.require(cov >= 0.9, tag + " covers " + fmt("%.3f", cov));
                detail += "; " + tag + ": " + fmt("%.3f", cov);
            }
        }
        o.detail = o.pass ? detail : o.detail + " (" + detail + ")";
        return o;
    }

    // 7. GCS rises with k on the long-delay-spread profile.
    outcome gcs_trend()
    {
        outcome o;
        const auto rows = run_experiment(
            config("profile = high-spread-300ns\nseed = 1\ncount = 200\npipeline = AD\ntaps = 25\ncomponents = 1, 2, 3\n"));
        const double g1 = *rows[0].gcs_taps_mean, g2 = *rows[1].gcs_taps_mean, g3 = *rows[2].gcs_taps_mean;
        const std::string detail = "GCS on taps k=1..3: " + fmt("%.4f", g1) + ", " + fmt("%.4f", g2) + ", " + fmt("%.4f", g3);
        o.require(g3 > g2 && g2 > g1, "not increasing: " + detail);
        o.require(g3 >= 0.95, "k=3 below 0.95: " + detail);
        if (o.pass)
            o.detail = detail;
        return o;
    }

    // 8. Coarser quantizers never raise mean GCS; Q=16 is nearly lossless.
    outcome quantization_monotonicity()
    {
        outcome o;
        std::string detail;
        const std::string base = "profile = high-spread-300ns\nseed = 1\ncount = 200\ncomponents = 1, 2, 3\n"
                                 "quant = 4, 6, 8, 16, off\n";
        for (const char *pipeline : {"pipeline = AD\ntaps = 25\n", "pipeline = EV\nsubbands = 13\n"})
        {
            const auto rows = run_experiment(config(base + pipeline));
            for (std::size_t k = 0; k < 3; ++k)
            {
                const auto *r = &rows[k * 5];
                const std::string tag = std::string(to_string(r->pipeline)) + " k=" + std::to_string(r->k);
                for (int q = 1; q < 5; ++q)
                    o.require(r[q].gcs_mean >= r[q - 1].gcs_mean, tag + " mean GCS drops at Q step " + std::to_string(q));
                const double gap = std::abs(r[4].gcs_mean - r[3].gcs_mean);
                o.require(gap <= 1e-3, tag + " Q=16 gap " + fmt("%.3g", gap));
                if (k == 1)
                    detail += (detail.empty() ? "" : "; ") + tag + " Q=4..off: " + fmt("%.4f", r[0].gcs_mean) + " .. " +
                              fmt("%.4f", r[4].gcs_mean) + ", Q16 gap " + fmt("%.1e", gap);
            }
        }
        if (o.pass)
            o.detail = detail;
        return o;
    }

    // 9. Feedback bits on a grid of hand-evaluated cases.
    outcome feedback_bits_grid()
    {
        struct row
        {
            mode m;
            std::size_t rows, n_t, k;
            std::uint64_t k_refresh;
            unsigned q;
            std::uint64_t bits;
            double mean;
        };
        const row grid[] = {
            {mode::angular_delay, 5, 32, 1, 1, 8, 592, 592.0},
            {mode::angular_delay, 5, 32, 2, 1, 8, 1184, 1184.0},
            {mode::angular_delay, 5, 32, 3, 1, 8, 1776, 1776.0},
            {mode::angular_delay, 25, 32, 1, 1, 8, 912, 912.0},
            {mode::angular_delay, 25, 32, 2, 1, 8, 1824, 1824.0},
            {mode::angular_delay, 25, 32, 3, 1, 8, 2736, 2736.0},
            {mode::angular_delay, 25, 32, 2, 1, 16, 3648, 3648.0},
            {mode::angular_delay, 25, 32, 3, 1, 4, 1368, 1368.0},
            {mode::angular_delay, 5, 32, 1, 4, 8, 208, 208.0},
            {mode::angular_delay, 25, 32, 2, 10, 8, 903, 902.4},
            {mode::angular_delay, 25, 32, 3, 7, 6, 1065, 7452.0 / 7.0},
            {mode::angular_delay, 624, 32, 32, 1, 8, 335872, 335872.0},
            {mode::eigenvector, 12, 32, 1, 1, 8, 704, 704.0},
            {mode::eigenvector, 12, 32, 2, 1, 8, 1408, 1408.0},
            {mode::eigenvector, 12, 32, 3, 1, 8, 2112, 2112.0},
            {mode::eigenvector, 13, 32, 1, 1, 8, 720, 720.0},
            {mode::eigenvector, 13, 32, 2, 1, 16, 2880, 2880.0},
            {mode::eigenvector, 13, 32, 3, 3, 8, 1744, 1744.0},
            {mode::eigenvector, 13, 32, 2, 5, 4, 554, 553.6},
            {mode::eigenvector, 12, 32, 1, 1000, 8, 513, 512.192},
        };
        outcome o;
        for (const auto &g : grid)
        {
            const auto b = feedback_bits(g.m, g.rows, g.n_t, g.k, {5e-3, g.k_refresh, g.q});
            const std::string tag = std::string(to_string(g.m)) + " rows=" + std::to_string(g.rows) + " k=" +
                                    std::to_string(g.k) + " kr=" + std::to_string(g.k_refresh) + " Q=" + std::to_string(g.q);
            o.require(b.ceil_bits == g.bits, tag + ": got " + std::to_string(b.ceil_bits) + ", want " + std::to_string(g.bits));
            o.require(std::abs(b.mean_bits - g.mean) <= 1e-9 * g.mean, tag + ": mean " + fmt("%.6f", b.mean_bits));
        }
        if (o.pass)
            o.detail = std::to_string(std::size(grid)) + " combinations matched exactly";
        return o;
    }

    std::string bytes_of(const dataset &ds)
    {
        std::ostringstream out;
        write_dataset(out, ds);
        return out.str();
    }

    // 10. Byte-identical reruns and bit-exact dataset round trips.
    outcome determinism_and_io()
    {
        outcome o;
        generator_config g;
        g.profile = "high-spread-300ns";
        g.seed = 77;
        g.count = 20;
        const auto profile = resolve_profile(g.profile);
        o.require(bytes_of(generate_dataset(g, profile)) == bytes_of(generate_dataset(g, profile)),
                  "generated dataset bytes differ");

        const auto cfg = config("profile = low-spread-30ns\nseed = 3\ncount = 20\ntaps = 5\nquant = off, 8\n");
        o.require(results_csv(run_experiment(cfg)) == results_csv(run_experiment(cfg)), "results CSV differs");
        const auto ev = config("profile = low-spread-30ns\nseed = 3\ncount = 20\npipeline = EV\nsubbands = 12\n");
        o.require(spectrum_csv(variance_spectrum(ev, resolve_dataset(ev))) ==
                      spectrum_csv(variance_spectrum(ev, resolve_dataset(ev))),
                  "spectrum CSV differs");

        const auto dir = fs::temp_directory_path() / "csipca_acceptance";
        fs::create_directories(dir);
        std::mt19937_64 rng(10);
        std::uniform_int_distribution<int> dim(1, 24), count(0, 4), gap(1, 5);
        for (int i = 0; i < 100; ++i)
        {
            dataset ds;
            ds.n_subcarriers = static_cast<std::size_t>(dim(rng));
            ds.n_ports = static_cast<std::size_t>(dim(rng));
            ds.subcarrier_spacing_hz = 15e3 * (1 + i % 4);
            std::uint64_t id = 0;
            const int n = count(rng);
            for (int s = 0; s < n; ++s)
            {
                cfr h;
                h.data = oracle::random_matrix(rng, static_cast<Eigen::Index>(ds.n_subcarriers),
                                               static_cast<Eigen::Index>(ds.n_ports));
                h.subcarrier_spacing_hz = ds.subcarrier_spacing_hz;
                h.sample_id = id;
                id += static_cast<std::uint64_t>(gap(rng));
                ds.samples.push_back(std::move(h));
            }
            const auto path = dir / "roundtrip.cfr";
            save_dataset(ds, path);
            const auto back = load_dataset(path);
            bool same = back.n_subcarriers == ds.n_subcarriers && back.n_ports == ds.n_ports &&
                        back.subcarrier_spacing_hz == ds.subcarrier_spacing_hz && back.samples.size() == ds.samples.size();
            for (std::size_t s = 0; same && s < ds.samples.size(); ++s)
                same = back.samples[s].sample_id == ds.samples[s].sample_id && back.samples[s].data == ds.samples[s].data;
            o.require(same, "round trip " + std::to_string(i) + " not bit-exact");
            o.require(bytes_of(back) == bytes_of(ds), "re-serialized bytes differ on dataset " + std::to_string(i));
        }
        fs::remove_all(dir);
        if (o.pass)
            o.detail = "dataset, results and spectrum bytes stable; 100 CFR1 round trips bit-exact";
        return o;
    }

    struct criterion
    {
        int id;
        const char *name;
        double budget_s; // 0 = no runtime bound
        std::function<outcome()> run;
    };
}

int main()
{
    const criterion criteria[] = {
        {1, "overhead exactness", 1.0, overhead_exactness},
        {2, "oracle equivalence", 30.0, oracle_equivalence},
        {3, "GCS-spectrum identity", 0.0, gcs_spectrum_identity},
        {4, "transform correctness", 0.0, transform_correctness},
        {5, "pipeline ceilings", 0.0, pipeline_ceilings},
        {6, "variance concentration", 120.0, variance_concentration},
        {7, "GCS trend in k", 0.0, gcs_trend},
        {8, "quantization monotonicity", 0.0, quantization_monotonicity},
        {9, "feedback bits", 0.0, feedback_bits_grid},
        {10, "determinism and I/O", 0.0, determinism_and_io},
    };

    int failed = 0;
    for (const auto &c : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0 && secs >= c.budget_s)
        {
            o.pass = false;
            o.detail += " [runtime " + fmt("%.2f", secs) + " s exceeds " + fmt("%.0f", c.budget_s) + " s]";
        }
        std::printf("criterion %2d %-26s %s  %s (%.2f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}

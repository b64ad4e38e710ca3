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

// csipca command line: dataset generation, experiment runs, variance spectra and tables.
//
// Exit codes: 0 ok, 1 internal error, 2 configuration error, 3 data error.

#include "csipca/chanforge.hpp"
#include "csipca/dataset_io.hpp"
#include "csipca/errors.hpp"
#include "csipca/experiment.hpp"
#include "csipca/keyvalue.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace csipca;

namespace
{
    constexpr int exit_internal = 1;
    constexpr int exit_config = 2;
    constexpr int exit_data = 3;

    void write_text(const fs::path &path, const std::string &text)
    {
        if (path.has_parent_path())
            fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw data_error("cannot open '" + path.string() + "' for writing");
        out << text;
        if (!out)
            throw data_error("write to '" + path.string() + "' failed");
    }

    std::string read_text(const fs::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw data_error("cannot open '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    struct gen_args
    {
        std::string config;
        std::string profile = "low-spread-30ns";
        std::uint64_t seed = 0;
        std::size_t count = 100;
        std::size_t subcarriers = 624;
        double scs_hz = 15e3;
        std::string panel = "2x8x2";
        double spacing = 0.5;
        std::string out;
    };

    int cmd_gen(const gen_args &a, const CLI::App &sub)
    {
        generator_config cfg;
        fs::path base_dir;
        if (!a.config.empty())
        {
            const auto kv = key_value_file::load(a.config);
            cfg = parse_generator_config(kv);
            base_dir = fs::path(a.config).parent_path();
        }
        // Explicit flags override the config file.
        if (a.config.empty() || sub.count("--profile"))
            cfg.profile = a.profile;
        if (a.config.empty() || sub.count("--seed"))
            cfg.seed = a.seed;
        if (a.config.empty() || sub.count("--count"))
            cfg.count = a.count;
        if (a.config.empty() || sub.count("--subcarriers"))
            cfg.n_subcarriers = a.subcarriers;
        if (a.config.empty() || sub.count("--scs-hz"))
            cfg.subcarrier_spacing_hz = a.scs_hz;
        if (a.config.empty() || sub.count("--panel") || sub.count("--element-spacing"))
            cfg.geometry = parse_panel(a.panel, a.spacing);
        cfg.validate();

        const auto profile = resolve_profile(cfg.profile, base_dir);
        const auto ds = generate_dataset(cfg, profile);
        save_dataset(ds, a.out);
        std::cerr << "wrote " << ds.samples.size() << " samples (" << ds.n_subcarriers << " x " << ds.n_ports
                  << ") to " << a.out << "\n";
        return 0;
    }

    int cmd_run(const std::string &config, const std::string &out_dir_flag)
    {
        const auto cfg = load_experiment_config(config);
        const fs::path out_dir = out_dir_flag.empty() ? cfg.out_dir : fs::path(out_dir_flag);
        const auto ds = resolve_dataset(cfg);
        const auto rows = run_experiment(cfg, ds);

        std::vector<reference_constant> refs;
        if (!cfg.refs.empty())
            refs = load_reference_constants(cfg.refs);

        const auto csv = results_csv(rows);
        const auto md = emit_comparison_table(rows, refs);
        write_text(out_dir / "results.csv", csv);
        write_text(out_dir / "results.md", md);
        std::cout << md;
        std::cerr << "wrote " << (out_dir / "results.csv").string() << " and " << (out_dir / "results.md").string()
                  << "\n";
        return 0;
    }

    int cmd_spectrum(const std::string &config, const std::string &out)
    {
        const auto cfg = load_experiment_config(config);
        const auto csv = spectrum_csv(variance_spectrum(cfg, resolve_dataset(cfg)));
        if (out.empty())
            std::cout << csv;
        else
            write_text(out, csv);
        return 0;
    }

    int cmd_table(const std::string &results, const std::string &refs_path, const std::string &out)
    {
        std::istringstream in(read_text(results));
        const auto rows = parse_results_csv(in);
        std::vector<reference_constant> refs;
        if (!refs_path.empty())
            refs = load_reference_constants(refs_path);
        const auto md = emit_comparison_table(rows, refs);
        if (out.empty())
            std::cout << md;
        else
            write_text(out, md);
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"csipca: PCA-based CSI compression toolkit"};
    app.require_subcommand(1);

    gen_args g;
    auto *gen = app.add_subcommand("gen", "Generate a seeded CFR dataset (CFR1 binary)");
    gen->add_option("--config", g.config, "Generator config file (key = value)");
    gen->add_option("--profile", g.profile, "Stock profile name or profile file")->capture_default_str();
    gen->add_option("--seed", g.seed, "Dataset seed")->capture_default_str();
    gen->add_option("--count", g.count, "Number of samples")->capture_default_str();
    gen->add_option("--subcarriers", g.subcarriers, "Subcarriers N")->capture_default_str();
    gen->add_option("--scs-hz", g.scs_hz, "Subcarrier spacing in Hz")->capture_default_str();
    gen->add_option("--panel", g.panel, "Panel rows x cols x polarizations")->capture_default_str();
    gen->add_option("--element-spacing", g.spacing, "Element spacing in wavelengths")->capture_default_str();
    gen->add_option("--out", g.out, "Output dataset path")->required();

    std::string run_config, run_out_dir;
    auto *run = app.add_subcommand("run", "Run an experiment and write results.csv / results.md");
    run->add_option("--config", run_config, "Experiment config file")->required();
    run->add_option("--out-dir", run_out_dir, "Output directory (overrides out_dir in the config)");

    std::string spec_config, spec_out;
    auto *spectrum = app.add_subcommand("spectrum", "Per-component explained variance as CSV");
    spectrum->add_option("--config", spec_config, "Experiment config file")->required();
    spectrum->add_option("--out", spec_out, "Write CSV here instead of stdout");

    std::string tab_results, tab_refs, tab_out;
    auto *table = app.add_subcommand("table", "Markdown comparison table from a results CSV");
    table->add_option("--results", tab_results, "results.csv from 'run'")->required();
    table->add_option("--refs", tab_refs, "Reference constants CSV");
    table->add_option("--out", tab_out, "Write markdown here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        if (*gen)
            return cmd_gen(g, *gen);
        if (*run)
            return cmd_run(run_config, run_out_dir);
        if (*spectrum)
            return cmd_spectrum(spec_config, spec_out);
        if (*table)
            return cmd_table(tab_results, tab_refs, tab_out);
    }
    catch (const config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const data_error &e)
    {
        std::cerr << "data error: " << e.what() << "\n";
        return exit_data;
    }
    catch (const input_error &e)
    {
        std::cerr << "data error: " << e.what() << "\n";
        return exit_data;
    }
    catch (const degenerate_input_error &e)
    {
        std::cerr << "data error: " << e.what() << "\n";
        return exit_data;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}

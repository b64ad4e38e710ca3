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

#include "csipca/chanforge.hpp"
#include "csipca/errors.hpp"
#include "csipca/keyvalue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace csipca
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;

        bool finite_all(const std::vector<double> &v)
        {
            return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
        }

        struct stock_entry
        {
            const char *name;
            std::vector<double> delays_ns;
            std::vector<double> powers_db;
            std::vector<double> azimuth_deg;
            std::vector<double> zenith_deg;
            double angular_spread_deg;
        };

        // Delay/power/angle values are generator parameters. The high-spread profile follows an
        // exponential power-delay profile with 300 ns decay constant.
        const std::vector<stock_entry> &stock_entries()
        {
            static const std::vector<stock_entry> entries = {
                {"low-spread-30ns",
                 {0.0, 8.0, 15.0, 22.0, 40.0},
                 {0.0, -3.0, -5.0, -8.0, -11.0},
                 {30.0, 31.5, 28.5, 33.0, 27.0},
                 {95.0, 96.0, 94.0, 97.0, 93.0},
                 1.0},
                {"high-spread-300ns",
                 {0.0, 30.0, 60.0, 95.0, 130.0, 170.0, 210.0, 250.0, 300.0, 350.0, 400.0, 450.0, 510.0,
                  570.0, 630.0, 700.0, 770.0, 840.0, 920.0, 1000.0, 1080.0, 1170.0, 1260.0, 1350.0, 1450.0},
                 {0.0, -0.43, -0.87, -1.38, -1.88, -2.46, -3.04, -3.62, -4.34, -5.07, -5.79, -6.51, -7.38,
                  -8.25, -9.12, -10.13, -11.15, -12.16, -13.32, -14.48, -15.63, -16.94, -18.24, -19.54, -20.99},
                 {30.0, 32.0, 28.0, 33.0, 27.0, 31.0, 29.0, 34.0, 26.0, 32.5, 27.5, 35.0, 25.0,
                  31.5, 28.5, 33.5, 26.5, 36.0, 24.0, 30.5, 29.5, 34.5, 25.5, 37.0, 23.0},
                 {95.0, 96.0, 94.0, 95.5, 94.5, 96.5, 93.5, 97.0, 93.0, 95.0, 96.0, 94.0, 95.5,
                  94.5, 97.5, 92.5, 96.0, 94.0, 95.0, 98.0, 92.0, 96.5, 93.5, 97.0, 93.0},
                 2.0},
            };
            return entries;
        }

        multipath_profile from_entry(const stock_entry &e)
        {
            multipath_profile p;
            p.name = e.name;
            for (double d : e.delays_ns)
                p.path_delays_s.push_back(d * 1e-9);
            p.path_powers_db = e.powers_db;
            p.azimuth_aod_deg = e.azimuth_deg;
            p.zenith_aod_deg = e.zenith_deg;
            p.angular_spread_deg = e.angular_spread_deg;
            return p;
        }

        std::uint64_t fnv1a(std::string_view text)
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : text)
            {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }

        std::string format_list(const std::vector<double> &v, double scale = 1.0)
        {
            std::ostringstream os;
            os.precision(17);
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? "," : "") << v[i] * scale;
            return os.str();
        }
    }

    void array_geometry::validate() const
    {
        if (rows < 1 || cols < 1)
            throw input_error("array_geometry: rows and cols must be >= 1");
        if (polarizations != 1 && polarizations != 2)
            throw input_error("array_geometry: polarizations must be 1 or 2");
        if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
            throw input_error("array_geometry: element_spacing must be finite and > 0");
    }

    array_geometry parse_panel(std::string_view text, double element_spacing)
    {
        array_geometry g;
        g.element_spacing = element_spacing;
        std::vector<std::size_t> dims;
        std::size_t start = 0;
        const std::string s(text);
        while (start <= s.size())
        {
            auto end = s.find('x', start);
            if (end == std::string::npos)
                end = s.size();
            auto part = trim(std::string_view(s).substr(start, end - start));
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw config_error("panel: expected RxCxP, got '" + s + "'");
            dims.push_back(std::stoul(part));
            start = end + 1;
        }
        if (dims.size() != 3)
            throw config_error("panel: expected RxCxP, got '" + s + "'");
        g.rows = dims[0];
        g.cols = dims[1];
        g.polarizations = dims[2];
        try
        {
            g.validate();
        }
        catch (const input_error &e)
        {
            throw config_error(std::string("panel: ") + e.what());
        }
        return g;
    }

    void multipath_profile::validate() const
    {
        const auto n = path_delays_s.size();
        if (n == 0)
            throw input_error("multipath_profile '" + name + "': no paths");
        if (path_powers_db.size() != n || azimuth_aod_deg.size() != n || zenith_aod_deg.size() != n)
            throw input_error("multipath_profile '" + name + "': delay, power and angle lists differ in length");
        if (!finite_all(path_delays_s) || !finite_all(path_powers_db) || !finite_all(azimuth_aod_deg) ||
            !finite_all(zenith_aod_deg))
            throw input_error("multipath_profile '" + name + "': non-finite value");
        if (!std::is_sorted(path_delays_s.begin(), path_delays_s.end()))
            throw input_error("multipath_profile '" + name + "': path delays must be nondecreasing");
        if (path_delays_s.front() < 0.0)
            throw input_error("multipath_profile '" + name + "': negative path delay");
        if (!(angular_spread_deg >= 0.0) || !std::isfinite(angular_spread_deg))
            throw input_error("multipath_profile '" + name + "': angular spread must be finite and >= 0");
    }

    std::vector<double> multipath_profile::linear_powers() const
    {
        std::vector<double> p(path_powers_db.size());
        double total = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            p[i] = std::pow(10.0, path_powers_db[i] / 10.0);
            total += p[i];
        }
        for (double &x : p)
            x /= total;
        return p;
    }

    std::vector<std::string> stock_profile_names()
    {
        std::vector<std::string> names;
        for (const auto &e : stock_entries())
            names.emplace_back(e.name);
        return names;
    }

    multipath_profile stock_profile(std::string_view name)
    {
        for (const auto &e : stock_entries())
            if (name == e.name)
                return from_entry(e);
        throw config_error("unknown stock profile '" + std::string(name) + "'");
    }

    multipath_profile parse_profile(const key_value_file &kv)
    {
        static const std::set<std::string, std::less<>> known = {"name", "delays_ns", "powers_db", "azimuth_deg",
                                                                 "zenith_deg", "angular_spread_deg"};
        if (auto unknown = kv.unknown_keys(known); !unknown.empty())
            throw config_error(kv.source() + ": unknown profile key '" + unknown.front() + "'");
        multipath_profile p;
        p.name = kv.get_string("name");
        for (double d : kv.get_double_list("delays_ns"))
            p.path_delays_s.push_back(d * 1e-9);
        p.path_powers_db = kv.get_double_list("powers_db");
        p.azimuth_aod_deg = kv.get_double_list("azimuth_deg");
        p.zenith_aod_deg = kv.get_double_list("zenith_deg");
        p.angular_spread_deg = kv.get_double("angular_spread_deg", 0.0);
        try
        {
            p.validate();
        }
        catch (const input_error &e)
        {
            throw config_error(kv.source() + ": " + e.what());
        }
        return p;
    }

    multipath_profile load_profile(const std::filesystem::path &path)
    {
        return parse_profile(key_value_file::load(path));
    }

    multipath_profile resolve_profile(std::string_view name_or_path, const std::filesystem::path &base_dir)
    {
        for (const auto &e : stock_entries())
            if (name_or_path == e.name)
                return from_entry(e);
        std::filesystem::path p(name_or_path);
        if (p.is_relative() && !base_dir.empty())
            p = base_dir / p;
        if (!std::filesystem::exists(p))
            throw config_error("profile '" + std::string(name_or_path) + "' is neither a stock profile nor a readable file");
        return load_profile(p);
    }

    cvec steering_vector(const array_geometry &geometry, double azimuth_deg, double zenith_deg)
    {
        geometry.validate();
        if (!std::isfinite(azimuth_deg) || !std::isfinite(zenith_deg))
            throw input_error("steering_vector: non-finite angle");

        const double az = azimuth_deg * deg2rad;
        const double zen = zenith_deg * deg2rad;
        const double k = 2.0 * std::numbers::pi * geometry.element_spacing;
        const double horizontal = k * std::sin(zen) * std::sin(az);
        const double vertical = k * std::cos(zen);
        const double amplitude = 1.0 / std::sqrt(static_cast<double>(geometry.n_ports()));

        cvec a(static_cast<Eigen::Index>(geometry.n_ports()));
        Eigen::Index port = 0;
        for (std::size_t r = 0; r < geometry.rows; ++r)
            for (std::size_t c = 0; c < geometry.cols; ++c)
            {
                const double phase = static_cast<double>(c) * horizontal + static_cast<double>(r) * vertical;
                const cplx value = std::polar(amplitude, phase);
                for (std::size_t p = 0; p < geometry.polarizations; ++p)
                    a(port++) = value;
            }
        return a;
    }

    std::vector<tap> generate_cir(const multipath_profile &profile, const array_geometry &geometry, std::uint64_t seed)
    {
        profile.validate();
        geometry.validate();

        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const auto powers = profile.linear_powers();

        std::vector<tap> taps;
        taps.reserve(profile.n_paths());
        for (std::size_t p = 0; p < profile.n_paths(); ++p)
        {
            // Fixed draw order: fading (re, im), then azimuth and zenith jitter.
            const double re = gauss(rng);
            const double im = gauss(rng);
            const double jitter_az = gauss(rng) * profile.angular_spread_deg;
            const double jitter_zen = gauss(rng) * profile.angular_spread_deg;
            const cplx fading = cplx(re, im) * std::sqrt(0.5 * powers[p]);
            tap t;
            t.delay_s = profile.path_delays_s[p];
            t.gain = fading * steering_vector(geometry, profile.azimuth_aod_deg[p] + jitter_az,
                                              profile.zenith_aod_deg[p] + jitter_zen);
            taps.push_back(std::move(t));
        }
        return taps;
    }

    void cfr::validate() const
    {
        if (data.rows() == 0 || data.cols() == 0)
            throw input_error("cfr: empty channel matrix");
        if (!all_finite(data))
            throw input_error("cfr: non-finite entry");
        if (!(subcarrier_spacing_hz > 0.0) || !std::isfinite(subcarrier_spacing_hz))
            throw input_error("cfr: subcarrier spacing must be finite and > 0");
    }

    cfr cir_to_cfr(std::span<const tap> taps, std::size_t n_subcarriers, double scs_hz, std::uint64_t sample_id)
    {
        if (n_subcarriers == 0)
            throw input_error("cir_to_cfr: n_subcarriers must be > 0");
        if (taps.empty())
            throw input_error("cir_to_cfr: no taps");
        if (!(scs_hz > 0.0) || !std::isfinite(scs_hz))
            throw input_error("cir_to_cfr: subcarrier spacing must be finite and > 0");
        const auto n_t = taps.front().gain.size();
        const auto n = static_cast<Eigen::Index>(n_subcarriers);
        const auto n_p = static_cast<Eigen::Index>(taps.size());

        // H_f = Phasors (N x P) * Gains (P x N_t)
        cmat phasors(n, n_p);
        cmat gains(n_p, n_t);
        for (Eigen::Index p = 0; p < n_p; ++p)
        {
            const auto &t = taps[static_cast<std::size_t>(p)];
            if (t.gain.size() != n_t)
                throw input_error("cir_to_cfr: taps have different port counts");
            gains.row(p) = t.gain.transpose();
            for (Eigen::Index s = 0; s < n; ++s)
                phasors(s, p) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(s) * scs_hz * t.delay_s);
        }

        cfr h;
        h.data = phasors * gains;
        h.subcarrier_spacing_hz = scs_hz;
        h.sample_id = sample_id;
        return h;
    }

    void dataset::validate() const
    {
        if (n_subcarriers == 0 || n_ports == 0)
            throw data_error("dataset: dimensions must be > 0");
        if (!(subcarrier_spacing_hz > 0.0) || !std::isfinite(subcarrier_spacing_hz))
            throw data_error("dataset: subcarrier spacing must be finite and > 0");
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const auto &s = samples[i];
            if (s.n_subcarriers() != n_subcarriers || s.n_ports() != n_ports)
                throw data_error("dataset: sample " + std::to_string(i) + " has shape " +
                                 std::to_string(s.n_subcarriers()) + "x" + std::to_string(s.n_ports()) +
                                 ", expected " + std::to_string(n_subcarriers) + "x" + std::to_string(n_ports));
            if (i == 0 ? s.sample_id != 0 : s.sample_id <= samples[i - 1].sample_id)
                throw data_error("dataset: sample ids must be strictly increasing from 0 (index " +
                                 std::to_string(i) + ")");
            if (!all_finite(s.data))
                throw data_error("dataset: sample " + std::to_string(i) + " has non-finite entries");
        }
    }

    void generator_config::validate() const
    {
        geometry.validate();
        if (n_subcarriers == 0)
            throw config_error("generator config: 'subcarriers' must be > 0");
        if (!(subcarrier_spacing_hz > 0.0))
            throw config_error("generator config: 'scs_hz' must be > 0");
    }

    std::uint64_t generator_config::hash(const multipath_profile &p) const
    {
        std::ostringstream os;
        os.precision(17);
        os << "profile=" << p.name << "\n"
           << "delays_s=" << format_list(p.path_delays_s) << "\n"
           << "powers_db=" << format_list(p.path_powers_db) << "\n"
           << "azimuth_deg=" << format_list(p.azimuth_aod_deg) << "\n"
           << "zenith_deg=" << format_list(p.zenith_aod_deg) << "\n"
           << "angular_spread_deg=" << p.angular_spread_deg << "\n"
           << "seed=" << seed << "\ncount=" << count << "\nsubcarriers=" << n_subcarriers
           << "\nscs_hz=" << subcarrier_spacing_hz << "\npanel=" << geometry.rows << "x" << geometry.cols << "x"
           << geometry.polarizations << "\nelement_spacing=" << geometry.element_spacing << "\n";
        return fnv1a(os.str());
    }

    generator_config parse_generator_config(const key_value_file &kv)
    {
        static const std::set<std::string, std::less<>> known = {"profile", "seed", "count", "subcarriers",
                                                                 "scs_hz", "panel", "element_spacing"};
        if (auto unknown = kv.unknown_keys(known); !unknown.empty())
            throw config_error(kv.source() + ": unknown generator key '" + unknown.front() + "'");
        generator_config cfg;
        cfg.profile = kv.get_string("profile");
        cfg.seed = kv.get_uint("seed");
        cfg.count = kv.get_uint("count");
        cfg.n_subcarriers = kv.get_uint("subcarriers", 624);
        cfg.subcarrier_spacing_hz = kv.get_double("scs_hz", 15e3);
        cfg.geometry = parse_panel(kv.get_string("panel", "2x8x2"), kv.get_double("element_spacing", 0.5));
        cfg.validate();
        return cfg;
    }

    std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample_id)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(sample_id), static_cast<std::uint32_t>(sample_id >> 32)};
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    }

    cfr generate_sample(const generator_config &cfg, const multipath_profile &profile, std::uint64_t sample_id)
    {
        const auto taps = generate_cir(profile, cfg.geometry, sample_seed(cfg.seed, sample_id));
        return cir_to_cfr(taps, cfg.n_subcarriers, cfg.subcarrier_spacing_hz, sample_id);
    }

    dataset generate_dataset(const generator_config &cfg, const multipath_profile &profile)
    {
        cfg.validate();
        profile.validate();
        dataset ds;
        ds.n_subcarriers = cfg.n_subcarriers;
        ds.n_ports = cfg.geometry.n_ports();
        ds.subcarrier_spacing_hz = cfg.subcarrier_spacing_hz;
        ds.meta = {cfg.hash(profile), cfg.seed};
        ds.samples.reserve(cfg.count);
        for (std::uint64_t id = 0; id < cfg.count; ++id)
            ds.samples.push_back(generate_sample(cfg, profile, id));
        return ds;
    }
}

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

#include "csipca/errors.hpp"
#include "csipca/experiment.hpp"
#include "csipca/keyvalue.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace csipca
{
    namespace
    {
        constexpr const char *results_header =
            "pipeline,rows,n_t,k,q_bits,gcs_variant,gcs_mean,gcs_p05,gcs_p50,gcs_p95,gcs_taps_mean,"
            "overhead_exact,overhead_pct_round,overhead_pct_floor,feedback_bits_mean,feedback_bits_ceil,"
            "samples,dataset_id,audit_max_dev";

        std::string num(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        std::string fixed(double v, int digits)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.*f", digits, v);
            return buf;
        }

        std::vector<std::string> split_csv_line(const std::string &line)
        {
            std::vector<std::string> out;
            std::size_t start = 0;
            while (true)
            {
                auto end = line.find(',', start);
                out.push_back(trim(std::string_view(line).substr(start, end == std::string::npos ? std::string::npos : end - start)));
                if (end == std::string::npos)
                    break;
                start = end + 1;
            }
            return out;
        }

        double parse_double(const std::string &s, const char *field)
        {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw data_error(std::string("results CSV: bad number in column '") + field + "': '" + s + "'");
            return v;
        }

        std::uint64_t parse_uint(const std::string &s, const char *field)
        {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw data_error(std::string("results CSV: bad integer in column '") + field + "': '" + s + "'");
            return v;
        }

        int parse_int(const std::string &s, const char *field)
        {
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw data_error(std::string("results CSV: bad integer in column '") + field + "': '" + s + "'");
            return v;
        }

        mode parse_mode(const std::string &s)
        {
            if (s == "AD")
                return mode::angular_delay;
            if (s == "EV")
                return mode::eigenvector;
            throw data_error("unknown pipeline '" + s + "'");
        }
    }

    std::string results_csv(const std::vector<result_row> &rows)
    {
        std::ostringstream os;
        os << results_header << "\n";
        for (const auto &r : rows)
        {
            os << to_string(r.pipeline) << ',' << r.rows << ',' << r.n_t << ',' << r.k << ','
               << (r.q_bits ? std::to_string(*r.q_bits) : "off") << ',' << to_string(r.variant) << ','
               << num(r.gcs_mean) << ',' << num(r.gcs_p05) << ',' << num(r.gcs_p50) << ',' << num(r.gcs_p95) << ','
               << (r.gcs_taps_mean ? num(*r.gcs_taps_mean) : "") << ',' << num(r.overhead) << ','
               << r.overhead_round << ',' << r.overhead_floor << ',' << (r.bits ? num(r.bits->mean_bits) : "") << ','
               << (r.bits ? std::to_string(r.bits->ceil_bits) : "") << ',' << r.samples << ',' << r.dataset << ','
               << (r.audit_max_dev ? num(*r.audit_max_dev) : "") << "\n";
        }
        return os.str();
    }

    std::vector<result_row> parse_results_csv(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line) || trim(line) != results_header)
            throw data_error("results CSV: missing or unexpected header line");
        std::vector<result_row> rows;
        while (std::getline(in, line))
        {
            if (trim(line).empty())
                continue;
            const auto f = split_csv_line(line);
            if (f.size() != 19)
                throw data_error("results CSV: expected 19 columns, got " + std::to_string(f.size()));
            result_row r;
            r.pipeline = parse_mode(f[0]);
            r.rows = parse_uint(f[1], "rows");
            r.n_t = parse_uint(f[2], "n_t");
            r.k = parse_uint(f[3], "k");
            if (f[4] != "off")
                r.q_bits = static_cast<unsigned>(parse_uint(f[4], "q_bits"));
            try
            {
                r.variant = parse_gcs_variant(f[5]);
            }
            catch (const config_error &e)
            {
                throw data_error(std::string("results CSV: ") + e.what());
            }
            r.gcs_mean = parse_double(f[6], "gcs_mean");
            r.gcs_p05 = parse_double(f[7], "gcs_p05");
            r.gcs_p50 = parse_double(f[8], "gcs_p50");
            r.gcs_p95 = parse_double(f[9], "gcs_p95");
            if (!f[10].empty())
                r.gcs_taps_mean = parse_double(f[10], "gcs_taps_mean");
            r.overhead = parse_double(f[11], "overhead_exact");
            r.overhead_round = parse_int(f[12], "overhead_pct_round");
            r.overhead_floor = parse_int(f[13], "overhead_pct_floor");
            if (!f[14].empty())
                r.bits = feedback_bits_result{parse_double(f[14], "feedback_bits_mean"), parse_uint(f[15], "feedback_bits_ceil")};
            r.samples = parse_uint(f[16], "samples");
            r.dataset = f[17];
            if (!f[18].empty())
                r.audit_max_dev = parse_double(f[18], "audit_max_dev");
            rows.push_back(std::move(r));
        }
        return rows;
    }

    std::string spectrum_csv(const std::vector<spectrum_row> &rows)
    {
        std::ostringstream os;
        os << "k,mean_pct,cum_pct,frac_samples_covered\n";
        for (const auto &r : rows)
            os << r.k << ',' << num(r.mean_pct) << ',' << num(r.cum_pct) << ',' << num(r.frac_samples_covered) << "\n";
        return os.str();
    }

    std::vector<reference_constant> parse_reference_constants(std::istream &in)
    {
        std::vector<reference_constant> out;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (trim(line).empty())
                continue;
            const auto f = split_csv_line(line);
            if (f.size() != 5)
                throw config_error("reference constants line " + std::to_string(line_no) + ": expected 5 fields");
            if (f[0] == "pipeline")
                continue;
            reference_constant c;
            try
            {
                c.pipeline = parse_mode(f[0]);
                c.model = f[1];
                c.dataset = f[2];
                c.gcs = parse_double(f[3], "gcs");
                c.overhead_pct = parse_int(f[4], "overhead_pct");
            }
            catch (const data_error &e)
            {
                throw config_error("reference constants line " + std::to_string(line_no) + ": " + e.what());
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    std::vector<reference_constant> load_reference_constants(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open reference constants '" + path.string() + "'");
        return parse_reference_constants(in);
    }

    std::string emit_comparison_table(const std::vector<result_row> &rows, const std::vector<reference_constant> &refs)
    {
        if (rows.empty())
            throw input_error("emit_comparison_table: no result rows");

        std::ostringstream os;
        os << "| Model | Pipeline | k | Q | Dataset | GCS mean | GCS p5 | GCS p50 | GCS p95 | GCS on taps | "
              "Overhead exact | Overhead (%) round | Overhead (%) floor | B_T (bits) |\n";
        os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";

        bool any_ad = false;
        bool any_ev = false;
        bool any_quantized = false;
        for (const auto &r : rows)
        {
            any_ad |= r.pipeline == mode::angular_delay;
            any_ev |= r.pipeline == mode::eigenvector;
            any_quantized |= r.q_bits.has_value();
            os << "| PCA | " << to_string(r.pipeline) << " | " << r.k << " | "
               << (r.q_bits ? std::to_string(*r.q_bits) : "off") << " | " << r.dataset << " | " << fixed(r.gcs_mean, 4)
               << " | " << fixed(r.gcs_p05, 4) << " | " << fixed(r.gcs_p50, 4) << " | " << fixed(r.gcs_p95, 4) << " | "
               << (r.gcs_taps_mean ? fixed(*r.gcs_taps_mean, 4) : "-") << " | " << fixed(r.overhead, 6) << " | "
               << r.overhead_round << " | " << r.overhead_floor << " | "
               << (r.bits ? std::to_string(r.bits->ceil_bits) : "-") << " |\n";
        }
        for (const auto &c : refs)
        {
            if ((c.pipeline == mode::angular_delay && !any_ad) || (c.pipeline == mode::eigenvector && !any_ev))
                continue;
            os << "| " << c.model << " (" << reference_label << ") | " << to_string(c.pipeline) << " | - | - | "
               << c.dataset << " | " << fixed(c.gcs, 4) << " | - | - | - | - | - | " << c.overhead_pct << " | "
               << c.overhead_pct << " | - |\n";
        }

        os << "\nGCS variant: " << to_string(rows.front().variant)
           << " (matrix inner product over all entries unless per-column-mean).\n";
        if (any_ad)
            os << "AD GCS is measured on the reconstructed full-band channel, so tap truncation loss is included; "
                  "'GCS on taps' excludes it.\n";
        if (any_quantized)
            os << "B_T counts 2Q bits per complex entry; the per-matrix quantizer scale (one f64 per payload) is not "
                  "included.\n";
        return os.str();
    }
}

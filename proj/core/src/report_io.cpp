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

#include "csipca/report_io.hpp"
#include "csipca/binary_io.hpp"
#include "csipca/errors.hpp"

#include <cstring>

namespace csipca
{
    namespace
    {
        std::uint32_t dim(Eigen::Index v) { return static_cast<std::uint32_t>(v); }

        void expect_magic(binary::reader &r, const char *magic)
        {
            char m[4];
            r.bytes(m, 4, "magic");
            if (std::memcmp(m, magic, 4) != 0)
                throw format_error(std::string("expected magic '") + magic + "'", 0);
        }
    }

    void write_report(std::ostream &out, const csi_report &report)
    {
        report.validate();
        const bool ad = report.report_mode == mode::angular_delay;
        if (ad && report.tap_indices.size() != static_cast<std::size_t>(report.compressed.rows()))
            throw input_error("write_report: AD report needs one tap index per compressed row");
        binary::write_u8(out, static_cast<std::uint8_t>(report.report_mode));
        binary::write_u8(out, static_cast<std::uint8_t>(report.q_bits.value_or(0)));
        binary::write_u32(out, dim(report.compressed.rows()));
        binary::write_u32(out, dim(report.transform.rows()));
        binary::write_u32(out, dim(report.transform.cols()));
        if (ad)
        {
            binary::write_u32(out, static_cast<std::uint32_t>(report.n_full));
            for (auto idx : report.tap_indices)
                binary::write_u32(out, static_cast<std::uint32_t>(idx));
        }
        binary::write_matrix_payload(out, report.compressed);
        binary::write_matrix_payload(out, report.transform);
    }

    csi_report read_report(std::istream &in)
    {
        binary::reader r(in);
        csi_report report;
        const auto m = r.u8("mode");
        if (m > 1)
            throw format_error("report: unknown mode byte " + std::to_string(m), 0);
        report.report_mode = static_cast<mode>(m);
        const auto q = r.u8("q_bits");
        if (q != 0)
            report.q_bits = q;
        const auto rows = r.u32("compressed rows");
        const auto t_rows = r.u32("transform rows");
        const auto k = r.u32("k");
        if (rows == 0 || t_rows == 0 || k == 0)
            throw format_error("report: zero dimension", r.offset());
        if (report.report_mode == mode::angular_delay)
        {
            report.n_full = r.u32("n_full");
            for (std::uint32_t i = 0; i < rows; ++i)
            {
                const auto at = r.offset();
                const auto idx = r.u32("tap index");
                if (idx >= report.n_full || (!report.tap_indices.empty() && idx <= report.tap_indices.back()))
                    throw format_error("report: tap indices must be strictly increasing and < n_full", at);
                report.tap_indices.push_back(idx);
            }
        }
        report.compressed = r.matrix_payload(rows, k, "compressed payload");
        report.transform = r.matrix_payload(t_rows, k, "transform payload");
        r.expect_end();
        return report;
    }

    void write_tap_channel(std::ostream &out, const tap_channel &t)
    {
        t.validate();
        out.write("TAP1", 4);
        binary::write_u32(out, dim(t.data.rows()));
        binary::write_u32(out, dim(t.data.cols()));
        binary::write_u32(out, static_cast<std::uint32_t>(t.n_full));
        for (auto idx : t.tap_indices)
            binary::write_u32(out, static_cast<std::uint32_t>(idx));
        binary::write_matrix_payload(out, t.data);
    }

    tap_channel read_tap_channel(std::istream &in)
    {
        binary::reader r(in);
        expect_magic(r, "TAP1");
        tap_channel t;
        const auto rows = r.u32("L");
        const auto cols = r.u32("N_t");
        t.n_full = r.u32("n_full");
        for (std::uint32_t i = 0; i < rows; ++i)
            t.tap_indices.push_back(r.u32("tap index"));
        t.data = r.matrix_payload(rows, cols, "tap payload");
        r.expect_end();
        try
        {
            t.validate();
        }
        catch (const input_error &e)
        {
            throw format_error(std::string("TAP1: ") + e.what(), 16);
        }
        return t;
    }

    void write_ev_matrix(std::ostream &out, const ev_matrix &e)
    {
        out.write("EVM1", 4);
        binary::write_u32(out, dim(e.data.rows()));
        binary::write_u32(out, dim(e.data.cols()));
        binary::write_matrix_payload(out, e.data);
    }

    ev_matrix read_ev_matrix(std::istream &in)
    {
        binary::reader r(in);
        expect_magic(r, "EVM1");
        const auto rows = r.u32("N_t");
        const auto cols = r.u32("N_SB");
        ev_matrix e;
        e.data = r.matrix_payload(rows, cols, "eigenvector payload");
        r.expect_end();
        return e;
    }
}

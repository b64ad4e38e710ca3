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

#include "csipca/dataset_io.hpp"
#include "csipca/binary_io.hpp"
#include "csipca/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace csipca
{
    namespace
    {
        constexpr char magic[4] = {'C', 'F', 'R', '1'};

        std::uint32_t narrow_dim(std::size_t v, const char *what)
        {
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw input_error(std::string("CFR1: ") + what + " does not fit in u32");
            return static_cast<std::uint32_t>(v);
        }
    }

    std::uint64_t cfr1_file_size(std::size_t n_subcarriers, std::size_t n_ports, std::size_t sample_count)
    {
        return cfr1_header_bytes + sample_count * (8 + 16 * static_cast<std::uint64_t>(n_subcarriers) * n_ports);
    }

    void write_dataset(std::ostream &out, const dataset &ds)
    {
        ds.validate();
        out.write(magic, 4);
        binary::write_u32(out, cfr1_version);
        binary::write_u32(out, narrow_dim(ds.n_subcarriers, "N"));
        binary::write_u32(out, narrow_dim(ds.n_ports, "N_t"));
        binary::write_u64(out, ds.samples.size());
        binary::write_f64(out, ds.subcarrier_spacing_hz);
        for (const auto &s : ds.samples)
        {
            binary::write_u64(out, s.sample_id);
            binary::write_matrix_payload(out, s.data);
        }
        if (!out)
            throw data_error("CFR1: write failed");
    }

    dataset read_dataset(std::istream &in)
    {
        binary::reader r(in);
        char m[4];
        r.bytes(m, 4, "magic");
        if (std::memcmp(m, magic, 4) != 0)
            throw format_error("CFR1: bad magic", 0);
        const auto version = r.u32("version");
        if (version != cfr1_version)
            throw format_error("CFR1: unsupported version " + std::to_string(version), 4);
        const auto n = r.u32("N");
        const auto n_t = r.u32("N_t");
        if (n == 0 || n_t == 0)
            throw format_error("CFR1: zero dimension in header", n == 0 ? 8 : 12);
        const auto count = r.u64("sample_count");
        const auto scs = r.f64("subcarrier spacing");
        if (!(scs > 0.0) || !std::isfinite(scs))
            throw format_error("CFR1: subcarrier spacing must be finite and > 0", 24);

        dataset ds;
        ds.n_subcarriers = n;
        ds.n_ports = n_t;
        ds.subcarrier_spacing_hz = scs;
        // Do not trust sample_count for the allocation; a truncated file fails on read below.
        ds.samples.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 16)));
        for (std::uint64_t i = 0; i < count; ++i)
        {
            const auto id_at = r.offset();
            cfr s;
            s.sample_id = r.u64("sample_id");
            if (i == 0 ? s.sample_id != 0 : s.sample_id <= ds.samples.back().sample_id)
                throw format_error("CFR1: sample ids must be strictly increasing from 0", id_at);
            s.subcarrier_spacing_hz = scs;
            s.data = r.matrix_payload(n, n_t, "sample payload");
            ds.samples.push_back(std::move(s));
        }
        r.expect_end();
        return ds;
    }

    void save_dataset(const dataset &ds, const std::filesystem::path &path)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw data_error("cannot open '" + path.string() + "' for writing");
        write_dataset(out, ds);
    }

    dataset load_dataset(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw data_error("cannot open dataset '" + path.string() + "'");
        return read_dataset(in);
    }
}

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

#include "catch_amalgamated.hpp"
#include "csipca/errors.hpp"
#include "csipca/pca.hpp"
#include "csipca/quant.hpp"
#include "csipca/report_io.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace csipca;

namespace
{
    std::string to_bytes(const csi_report &r)
    {
        std::ostringstream out;
        write_report(out, r);
        return out.str();
    }

    csi_report from_bytes(const std::string &b)
    {
        std::istringstream in(b);
        return read_report(in);
    }

    csi_report sample_ad(std::mt19937_64 &rng)
    {
        tap_channel t;
        t.data = oracle::random_matrix(rng, 5, 32);
        t.tap_indices = {1, 2, 40, 300, 623};
        t.n_full = 624;
        return compress_ad(t, 2);
    }
}

TEST_CASE("Report IO - AD report layout and round trip")
{
    std::mt19937_64 rng(113);
    auto r = sample_ad(rng);
    const auto bytes = to_bytes(r);
    CHECK(bytes.size() == 14 + 4 + 5 * 4 + (5 * 2 + 32 * 2) * 16);
    CHECK(bytes[0] == 0);
    CHECK(bytes[1] == 0);
    auto back = from_bytes(bytes);
    CHECK(back.report_mode == mode::angular_delay);
    CHECK(!back.q_bits);
    CHECK(back.tap_indices == r.tap_indices);
    CHECK(back.n_full == 624);
    CHECK(back.compressed == r.compressed);
    CHECK(back.transform == r.transform);
    CHECK(to_bytes(back) == bytes);
}

TEST_CASE("Report IO - EV and quantized reports")
{
    std::mt19937_64 rng(127);
    ev_matrix e;
    e.data = oracle::random_matrix(rng, 32, 13);
    auto r = quantize_report(compress_ev(e, 3), 8);
    const auto bytes = to_bytes(r);
    CHECK(bytes.size() == 14 + (32 * 3 + 13 * 3) * 16);
    auto back = from_bytes(bytes);
    CHECK(back.report_mode == mode::eigenvector);
    REQUIRE(back.q_bits);
    CHECK(*back.q_bits == 8);
    CHECK(back.compressed == r.compressed);
    CHECK(reconstruct(back) == reconstruct(r));
}

TEST_CASE("Report IO - malformed input")
{
    std::mt19937_64 rng(131);
    const auto bytes = to_bytes(sample_ad(rng));

    std::string bad_mode = bytes;
    bad_mode[0] = 7;
    CHECK_THROWS_AS(from_bytes(bad_mode), format_error);

    CHECK_THROWS_AS(from_bytes(bytes.substr(0, bytes.size() - 3)), format_error);
    CHECK_THROWS_AS(from_bytes(bytes + "x"), format_error);

    // Second tap index (offset 14 + 4 + 4) set equal to the first.
    std::string dup = bytes;
    dup[22] = 1;
    try
    {
        from_bytes(dup);
        FAIL("expected format_error");
    }
    catch (const format_error &e)
    {
        CHECK(e.offset() == 22);
    }
}

TEST_CASE("Report IO - tap channel and eigenvector golden formats")
{
    std::mt19937_64 rng(137);
    tap_channel t;
    t.data = oracle::random_matrix(rng, 3, 4);
    t.tap_indices = {0, 5, 9};
    t.n_full = 10;
    std::ostringstream out;
    write_tap_channel(out, t);
    std::istringstream in(out.str());
    auto t2 = read_tap_channel(in);
    CHECK(t2.data == t.data);
    CHECK(t2.tap_indices == t.tap_indices);
    CHECK(t2.n_full == t.n_full);

    ev_matrix e;
    e.data = oracle::random_matrix(rng, 4, 2);
    std::ostringstream eo;
    write_ev_matrix(eo, e);
    std::istringstream ei(eo.str());
    CHECK(read_ev_matrix(ei).data == e.data);

    std::istringstream wrong(eo.str());
    CHECK_THROWS_AS(read_tap_channel(wrong), format_error);
}

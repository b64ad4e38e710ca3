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

#include "csipca/quant.hpp"
#include "csipca/binary_io.hpp"
#include "csipca/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

namespace csipca
{
    namespace
    {
        void check_bits(unsigned q_bits)
        {
            if (q_bits < 1 || q_bits > max_q_bits)
                throw input_error("quantize: q_bits = " + std::to_string(q_bits) + " outside [1, " +
                                  std::to_string(max_q_bits) + "]");
        }

        std::uint32_t encode(double x, double scale, double max_code)
        {
            // Map [-scale, scale] onto [0, M] and round to the nearest level.
            const double u = (x / scale + 1.0) * 0.5 * max_code;
            const double c = std::round(u);
            return static_cast<std::uint32_t>(std::clamp(c, 0.0, max_code));
        }

        double decode(std::uint32_t code, double scale, double max_code)
        {
            return scale * ((2.0 * static_cast<double>(code) - max_code) / max_code);
        }
    }

    void quantized_matrix::validate() const
    {
        check_bits(q_bits);
        if (real_codes.rows() != imag_codes.rows() || real_codes.cols() != imag_codes.cols())
            throw input_error("quantized_matrix: real and imaginary code shapes differ");
        if (!(scale > 0.0) || !std::isfinite(scale))
            throw input_error("quantized_matrix: scale must be finite and > 0");
        const auto top = max_code();
        for (Eigen::Index j = 0; j < cols(); ++j)
            for (Eigen::Index i = 0; i < rows(); ++i)
                if (real_codes(i, j) > top || imag_codes(i, j) > top)
                    throw input_error("quantized_matrix: code out of range");
    }

    bool quantized_matrix::operator==(const quantized_matrix &o) const
    {
        return q_bits == o.q_bits && zero_source == o.zero_source && scale == o.scale &&
               real_codes.rows() == o.real_codes.rows() && real_codes.cols() == o.real_codes.cols() &&
               real_codes == o.real_codes && imag_codes == o.imag_codes;
    }

    quantized_matrix quantize(const cmat &m, unsigned q_bits)
    {
        check_bits(q_bits);
        if (!all_finite(m))
            throw input_error("quantize: non-finite entry");

        quantized_matrix qm;
        qm.q_bits = q_bits;
        qm.real_codes.resize(m.rows(), m.cols());
        qm.imag_codes.resize(m.rows(), m.cols());

        double scale = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                scale = std::max({scale, std::abs(m(i, j).real()), std::abs(m(i, j).imag())});

        const double top = static_cast<double>(qm.max_code());
        if (scale == 0.0)
        {
            const auto mid = static_cast<std::uint32_t>(std::uint64_t{1} << (q_bits - 1));
            qm.scale = 1.0;
            qm.zero_source = true;
            qm.real_codes.setConstant(mid);
            qm.imag_codes.setConstant(mid);
            return qm;
        }

        qm.scale = scale;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
            {
                qm.real_codes(i, j) = encode(m(i, j).real(), scale, top);
                qm.imag_codes(i, j) = encode(m(i, j).imag(), scale, top);
            }
        return qm;
    }

    cmat dequantize(const quantized_matrix &qm)
    {
        qm.validate();
        cmat m(qm.rows(), qm.cols());
        if (qm.zero_source)
        {
            m.setZero();
            return m;
        }
        const double top = static_cast<double>(qm.max_code());
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                m(i, j) = cplx(decode(qm.real_codes(i, j), qm.scale, top), decode(qm.imag_codes(i, j), qm.scale, top));
        return m;
    }

    double quantization_error_bound(double scale, unsigned q_bits)
    {
        check_bits(q_bits);
        return scale / static_cast<double>((std::uint64_t{1} << q_bits) - 1);
    }

    csi_report quantize_report(const csi_report &report, unsigned q_bits)
    {
        report.validate();
        csi_report out = report;
        out.compressed = dequantize(quantize(report.compressed, q_bits));
        out.transform = dequantize(quantize(report.transform, q_bits));
        out.q_bits = q_bits;
        return out;
    }

    void write_quantized(std::ostream &out, const quantized_matrix &qm)
    {
        qm.validate();
        out.write("QMX1", 4);
        binary::write_u8(out, static_cast<std::uint8_t>(qm.q_bits));
        binary::write_u8(out, qm.zero_source ? 1 : 0);
        binary::write_u32(out, static_cast<std::uint32_t>(qm.rows()));
        binary::write_u32(out, static_cast<std::uint32_t>(qm.cols()));
        binary::write_f64(out, qm.scale);

        std::vector<std::uint8_t> packed;
        std::uint64_t acc = 0;
        unsigned filled = 0;
        auto push = [&](std::uint32_t code) {
            acc |= static_cast<std::uint64_t>(code) << filled;
            filled += qm.q_bits;
            while (filled >= 8)
            {
                packed.push_back(static_cast<std::uint8_t>(acc & 0xFF));
                acc >>= 8;
                filled -= 8;
            }
        };
        for (Eigen::Index i = 0; i < qm.rows(); ++i)
            for (Eigen::Index j = 0; j < qm.cols(); ++j)
            {
                push(qm.real_codes(i, j));
                push(qm.imag_codes(i, j));
            }
        if (filled > 0)
            packed.push_back(static_cast<std::uint8_t>(acc & 0xFF));
        out.write(reinterpret_cast<const char *>(packed.data()), static_cast<std::streamsize>(packed.size()));
    }

    quantized_matrix read_quantized(std::istream &in)
    {
        binary::reader r(in);
        char magic[4];
        r.bytes(magic, 4, "magic");
        if (std::memcmp(magic, "QMX1", 4) != 0)
            throw format_error("QMX1: bad magic", 0);
        quantized_matrix qm;
        qm.q_bits = r.u8("q_bits");
        if (qm.q_bits < 1 || qm.q_bits > max_q_bits)
            throw format_error("QMX1: q_bits out of range", 4);
        const auto flags = r.u8("flags");
        if (flags > 1)
            throw format_error("QMX1: unknown flags", 5);
        qm.zero_source = flags == 1;
        const auto rows = r.u32("rows");
        const auto cols = r.u32("cols");
        qm.scale = r.f64("scale");
        if (!(qm.scale > 0.0) || !std::isfinite(qm.scale))
            throw format_error("QMX1: scale must be finite and > 0", 14);

        const std::uint64_t n_codes = 2ull * rows * cols;
        const std::uint64_t n_bytes = (n_codes * qm.q_bits + 7) / 8;
        std::vector<std::uint8_t> packed(n_bytes);
        r.bytes(reinterpret_cast<char *>(packed.data()), packed.size(), "packed codes");
        r.expect_end();

        qm.real_codes.resize(rows, cols);
        qm.imag_codes.resize(rows, cols);
        const std::uint64_t mask = qm.max_code();
        std::size_t byte = 0;
        std::uint64_t acc = 0;
        unsigned filled = 0;
        auto pull = [&]() {
            while (filled < qm.q_bits)
            {
                acc |= static_cast<std::uint64_t>(packed[byte++]) << filled;
                filled += 8;
            }
            const auto code = static_cast<std::uint32_t>(acc & mask);
            acc >>= qm.q_bits;
            filled -= qm.q_bits;
            return code;
        };
        for (Eigen::Index i = 0; i < qm.rows(); ++i)
            for (Eigen::Index j = 0; j < qm.cols(); ++j)
            {
                qm.real_codes(i, j) = pull();
                qm.imag_codes(i, j) = pull();
            }
        return qm;
    }
}

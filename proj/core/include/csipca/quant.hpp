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

#ifndef CSIPCA_QUANT_HPP
#define CSIPCA_QUANT_HPP

#include "csipca/pca.hpp"
#include "csipca/types.hpp"

#include <cstdint>
#include <istream>
#include <ostream>

namespace csipca
{
    using code_matrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;

    inline constexpr unsigned max_q_bits = 32;

    // Symmetric uniform scalar quantizer with 2^Q levels spanning [-scale, +scale]:
    //   level(c) = scale * (2c - M) / M,   M = 2^Q - 1.
    // scale is the largest |real| or |imag| component of the source matrix. A zero source
    // has no representable midpoint (the level count is even), so it is flagged and
    // dequantizes to exact zeros with scale = 1.
    struct quantized_matrix
    {
        code_matrix real_codes;
        code_matrix imag_codes;
        double scale = 1.0;
        unsigned q_bits = 8;
        bool zero_source = false;

        Eigen::Index rows() const { return real_codes.rows(); }
        Eigen::Index cols() const { return real_codes.cols(); }
        std::uint64_t max_code() const { return (std::uint64_t{1} << q_bits) - 1; }
        void validate() const;

        bool operator==(const quantized_matrix &o) const;
    };

    quantized_matrix quantize(const cmat &m, unsigned q_bits);
    cmat dequantize(const quantized_matrix &qm);

    // Half a quantizer step: the worst-case per-component error, scale / (2^Q - 1).
    double quantization_error_bound(double scale, unsigned q_bits);

    // Both payloads replaced by their quantize/dequantize level values; q_bits recorded.
    csi_report quantize_report(const csi_report &report, unsigned q_bits);

    // Serialized form: magic "QMX1" | Q u8 | flags u8 (bit 0 = zero source) | rows u32 | cols u32 |
    // scale f64 | codes bit-packed LSB-first, row-major, real code then imag code per entry,
    // zero-padded to a whole byte. All little-endian.
    void write_quantized(std::ostream &out, const quantized_matrix &qm);
    quantized_matrix read_quantized(std::istream &in);
}

#endif

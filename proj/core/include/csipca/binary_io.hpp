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

#ifndef CSIPCA_BINARY_IO_HPP
#define CSIPCA_BINARY_IO_HPP

#include "csipca/types.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

namespace csipca::binary
{
    // Little-endian primitives shared by the CFR1, CSI report and quantized-matrix formats.
    // Complex values are two f64 (real, imag). Matrices are written row-major.

    void write_u8(std::ostream &out, std::uint8_t v);
    void write_u32(std::ostream &out, std::uint32_t v);
    void write_u64(std::ostream &out, std::uint64_t v);
    void write_f64(std::ostream &out, double v);
    void write_complex(std::ostream &out, cplx v);
    void write_matrix_payload(std::ostream &out, const cmat &m);

    // Tracks the byte offset so format errors can report where they happened.
    class reader
    {
    public:
        explicit reader(std::istream &in) : in_(in) {}

        std::uint8_t u8(const char *what);
        std::uint32_t u32(const char *what);
        std::uint64_t u64(const char *what);
        double f64(const char *what);
        cplx complex(const char *what);
        void bytes(char *dst, std::size_t n, const char *what);
        cmat matrix_payload(std::size_t rows, std::size_t cols, const char *what);

        std::uint64_t offset() const { return offset_; }
        // Throws unless the stream is exhausted.
        void expect_end();

    private:
        std::istream &in_;
        std::uint64_t offset_ = 0;
    };
}

#endif

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

#include "csipca/binary_io.hpp"
#include "csipca/errors.hpp"

#include <bit>
#include <cmath>

namespace csipca::binary
{
    namespace
    {
        template <typename T>
        void write_le(std::ostream &out, T v)
        {
            char buf[sizeof(T)];
            for (std::size_t i = 0; i < sizeof(T); ++i)
                buf[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
            out.write(buf, sizeof(T));
        }
    }

    void write_u8(std::ostream &out, std::uint8_t v) { write_le(out, v); }
    void write_u32(std::ostream &out, std::uint32_t v) { write_le(out, v); }
    void write_u64(std::ostream &out, std::uint64_t v) { write_le(out, v); }
    void write_f64(std::ostream &out, double v) { write_le(out, std::bit_cast<std::uint64_t>(v)); }

    void write_complex(std::ostream &out, cplx v)
    {
        write_f64(out, v.real());
        write_f64(out, v.imag());
    }

    void write_matrix_payload(std::ostream &out, const cmat &m)
    {
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                write_complex(out, m(r, c));
    }

    void reader::bytes(char *dst, std::size_t n, const char *what)
    {
        in_.read(dst, static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw format_error(std::string("truncated file while reading ") + what, offset_ + static_cast<std::uint64_t>(in_.gcount()));
        offset_ += n;
    }

    namespace
    {
        template <typename T>
        T read_le(reader &r, const char *what)
        {
            unsigned char buf[sizeof(T)];
            r.bytes(reinterpret_cast<char *>(buf), sizeof(T), what);
            std::uint64_t v = 0;
            for (std::size_t i = 0; i < sizeof(T); ++i)
                v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
            return static_cast<T>(v);
        }
    }

    std::uint8_t reader::u8(const char *what) { return read_le<std::uint8_t>(*this, what); }
    std::uint32_t reader::u32(const char *what) { return read_le<std::uint32_t>(*this, what); }
    std::uint64_t reader::u64(const char *what) { return read_le<std::uint64_t>(*this, what); }
    double reader::f64(const char *what) { return std::bit_cast<double>(read_le<std::uint64_t>(*this, what)); }

    cplx reader::complex(const char *what)
    {
        const double re = f64(what);
        const double im = f64(what);
        return {re, im};
    }

    cmat reader::matrix_payload(std::size_t rows, std::size_t cols, const char *what)
    {
        cmat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
            {
                const auto at = offset_;
                m(r, c) = complex(what);
                if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
                    throw format_error(std::string("non-finite value in ") + what, at);
            }
        return m;
    }

    void reader::expect_end()
    {
        if (in_.peek() != std::char_traits<char>::eof())
            throw format_error("trailing bytes after payload", offset_);
    }
}

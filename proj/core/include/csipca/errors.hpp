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

#ifndef CSIPCA_ERRORS_HPP
#define CSIPCA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csipca
{
    // Invalid argument to a library operation (shape, range, non-finite values).
    class input_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Input is well formed but the operation is undefined on it (zero vector, zero spectrum).
    class degenerate_input_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Experiment / generator / profile configuration problems. The CLI maps these to exit code 2.
    class config_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Dataset content problems (dimension mismatch between data and config). CLI exit code 3.
    class data_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Malformed binary file. Carries the byte offset at which the problem was detected.
    class format_error : public data_error
    {
    public:
        format_error(const std::string &what, std::uint64_t offset);
        std::uint64_t offset() const noexcept { return offset_; }

    private:
        std::uint64_t offset_;
    };
}

#endif

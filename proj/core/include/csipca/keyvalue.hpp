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

#ifndef CSIPCA_KEYVALUE_HPP
#define CSIPCA_KEYVALUE_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace csipca
{
    // Plain-text "key = value" file as used by profiles, generator and experiment configs.
    // '#' starts a comment, blank lines are ignored, keys are case sensitive and unique.
    // Accessors throw config_error naming the offending key.
    class key_value_file
    {
    public:
        key_value_file() = default;

        static key_value_file parse(std::istream &in, std::string source_name = "<stream>");
        static key_value_file load(const std::filesystem::path &path);

        bool has(std::string_view key) const;
        const std::string &source() const { return source_; }

        std::string get_string(std::string_view key) const;
        std::string get_string(std::string_view key, std::string_view fallback) const;
        std::uint64_t get_uint(std::string_view key) const;
        std::uint64_t get_uint(std::string_view key, std::uint64_t fallback) const;
        double get_double(std::string_view key) const;
        double get_double(std::string_view key, double fallback) const;
        std::vector<double> get_double_list(std::string_view key) const;
        std::vector<std::uint64_t> get_uint_list(std::string_view key) const;
        std::vector<std::string> get_string_list(std::string_view key) const;

        // Keys present in the file but not in `known`. Used to reject typos.
        std::vector<std::string> unknown_keys(const std::set<std::string, std::less<>> &known) const;

        void set(std::string key, std::string value);
        const std::map<std::string, std::string, std::less<>> &entries() const { return entries_; }

    private:
        const std::string &raw(std::string_view key) const;

        std::map<std::string, std::string, std::less<>> entries_;
        std::string source_;
    };

    // Splits on ',' and trims whitespace; empty items are dropped.
    std::vector<std::string> split_list(std::string_view text);
    std::string trim(std::string_view text);
}

#endif

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

#include "csipca/keyvalue.hpp"
#include "csipca/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace csipca
{
    std::string trim(std::string_view text)
    {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos)
            return {};
        const auto last = text.find_last_not_of(" \t\r\n");
        return std::string(text.substr(first, last - first + 1));
    }

    std::vector<std::string> split_list(std::string_view text)
    {
        std::vector<std::string> items;
        std::size_t start = 0;
        while (start <= text.size())
        {
            auto end = text.find(',', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto item = trim(text.substr(start, end - start));
            if (!item.empty())
                items.push_back(std::move(item));
            start = end + 1;
        }
        return items;
    }

    key_value_file key_value_file::parse(std::istream &in, std::string source_name)
    {
        key_value_file kv;
        kv.source_ = std::move(source_name);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            auto stripped = trim(line);
            if (stripped.empty())
                continue;
            auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw config_error(kv.source_ + ":" + std::to_string(line_no) + ": expected 'key = value'");
            auto key = trim(std::string_view(stripped).substr(0, eq));
            auto value = trim(std::string_view(stripped).substr(eq + 1));
            if (key.empty())
                throw config_error(kv.source_ + ":" + std::to_string(line_no) + ": empty key");
            if (kv.entries_.contains(key))
                throw config_error(kv.source_ + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
            kv.entries_.emplace(std::move(key), std::move(value));
        }
        return kv;
    }

    key_value_file key_value_file::load(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open config file '" + path.string() + "'");
        return parse(in, path.string());
    }

    bool key_value_file::has(std::string_view key) const
    {
        return entries_.find(key) != entries_.end();
    }

    const std::string &key_value_file::raw(std::string_view key) const
    {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw config_error(source_ + ": missing required key '" + std::string(key) + "'");
        return it->second;
    }

    std::string key_value_file::get_string(std::string_view key) const
    {
        return raw(key);
    }

    std::string key_value_file::get_string(std::string_view key, std::string_view fallback) const
    {
        return has(key) ? raw(key) : std::string(fallback);
    }

    namespace
    {
        std::uint64_t to_uint(const std::string &text, const std::string &where, std::string_view key)
        {
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw config_error(where + ": key '" + std::string(key) + "' expects a non-negative integer, got '" + text + "'");
            return value;
        }

        double to_double(const std::string &text, const std::string &where, std::string_view key)
        {
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
                throw config_error(where + ": key '" + std::string(key) + "' expects a finite number, got '" + text + "'");
            return value;
        }
    }

    std::uint64_t key_value_file::get_uint(std::string_view key) const
    {
        return to_uint(raw(key), source_, key);
    }

    std::uint64_t key_value_file::get_uint(std::string_view key, std::uint64_t fallback) const
    {
        return has(key) ? get_uint(key) : fallback;
    }

    double key_value_file::get_double(std::string_view key) const
    {
        return to_double(raw(key), source_, key);
    }

    double key_value_file::get_double(std::string_view key, double fallback) const
    {
        return has(key) ? get_double(key) : fallback;
    }

    std::vector<double> key_value_file::get_double_list(std::string_view key) const
    {
        std::vector<double> out;
        for (const auto &item : split_list(raw(key)))
            out.push_back(to_double(item, source_, key));
        return out;
    }

    std::vector<std::uint64_t> key_value_file::get_uint_list(std::string_view key) const
    {
        std::vector<std::uint64_t> out;
        for (const auto &item : split_list(raw(key)))
            out.push_back(to_uint(item, source_, key));
        return out;
    }

    std::vector<std::string> key_value_file::get_string_list(std::string_view key) const
    {
        return split_list(raw(key));
    }

    std::vector<std::string> key_value_file::unknown_keys(const std::set<std::string, std::less<>> &known) const
    {
        std::vector<std::string> out;
        for (const auto &[key, value] : entries_)
            if (!known.contains(key))
                out.push_back(key);
        return out;
    }

    void key_value_file::set(std::string key, std::string value)
    {
        entries_[std::move(key)] = std::move(value);
    }
}

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

#ifndef CSIPCA_DATASET_IO_HPP
#define CSIPCA_DATASET_IO_HPP

#include "csipca/chanforge.hpp"

#include <filesystem>
#include <istream>
#include <ostream>

namespace csipca
{
    // CFR1 dataset file, all fields little-endian:
    //
    //   offset  size  field
    //        0     4  magic "CFR1"
    //        4     4  version (u32, = 1)
    //        8     4  N, subcarriers (u32)
    //       12     4  N_t, ports (u32)
    //       16     8  sample_count (u64)
    //       24     8  subcarrier spacing in Hz (f64)
    //
    // followed by sample_count records of: sample_id (u64) then N * N_t complex entries in
    // row-major (subcarrier-major) order, each as f64 real then f64 imag.
    //
    // The generator meta (config hash, seed) is not part of the format; loaded datasets carry
    // a zero meta.

    inline constexpr std::uint32_t cfr1_version = 1;
    inline constexpr std::size_t cfr1_header_bytes = 32;

    std::uint64_t cfr1_file_size(std::size_t n_subcarriers, std::size_t n_ports, std::size_t sample_count);

    void write_dataset(std::ostream &out, const dataset &ds);
    dataset read_dataset(std::istream &in);

    void save_dataset(const dataset &ds, const std::filesystem::path &path);
    dataset load_dataset(const std::filesystem::path &path);
}

#endif

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

#ifndef CSIPCA_REPORT_IO_HPP
#define CSIPCA_REPORT_IO_HPP

#include "csipca/pca.hpp"
#include "csipca/xforms.hpp"

#include <istream>
#include <ostream>

namespace csipca
{
    // CSI report, little-endian:
    //   mode u8 (0 = AD, 1 = EV) | q_bits u8 (0 = unquantized) |
    //   compressed rows u32 | transform rows u32 | k u32 |
    //   AD only: n_full u32, then one u32 tap index per compressed row |
    //   compressed payload (rows x k) | transform payload (transform rows x k)
    // Payloads are row-major complex entries, f64 real then f64 imag (as in CFR1).
    void write_report(std::ostream &out, const csi_report &report);
    csi_report read_report(std::istream &in);

    // Golden-file encodings for intermediate representations.
    //   TAP1: magic | L u32 | N_t u32 | n_full u32 | L x u32 tap indices | L x N_t payload
    //   EVM1: magic | N_t u32 | N_SB u32 | payload
    void write_tap_channel(std::ostream &out, const tap_channel &t);
    tap_channel read_tap_channel(std::istream &in);
    void write_ev_matrix(std::ostream &out, const ev_matrix &e);
    ev_matrix read_ev_matrix(std::istream &in);
}

#endif

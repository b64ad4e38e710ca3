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

#ifndef CSIPCA_TYPES_HPP
#define CSIPCA_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace csipca
{
    using cplx = std::complex<double>;
    using cmat = Eigen::MatrixXcd;     // column-major complex matrix
    using cvec = Eigen::VectorXcd;     // complex column vector
    using crow = Eigen::RowVectorXcd;  // complex row vector
    using rvec = Eigen::VectorXd;

    // Which representation a PCA basis / CSI report operates on.
    enum class mode : std::uint8_t
    {
        angular_delay = 0, // L x N_t truncated angular-delay matrix, PCA over the antenna axis
        eigenvector = 1    // N_t x N_SB sub-band eigenvector matrix, PCA over the sub-band axis
    };

    const char *to_string(mode m);

    // True when every entry has finite real and imaginary parts.
    bool all_finite(const cmat &m);

    // Rotates `v` so that its largest-magnitude entry is real and positive.
    // Ties go to the lowest index. A zero vector is left untouched.
    void normalize_phase(Eigen::Ref<cvec> v);
}

#endif

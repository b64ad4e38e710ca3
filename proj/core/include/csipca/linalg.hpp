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

#ifndef CSIPCA_LINALG_HPP
#define CSIPCA_LINALG_HPP

#include "csipca/types.hpp"

namespace csipca::linalg
{
    struct right_singular_system
    {
        rvec singular_values; // nonincreasing, length D
        cmat v;               // D x D unitary, column i pairs with singular_values(i)
        int sweeps = 0;
    };

    // One-sided (Hestenes) Jacobi SVD of an S x D complex matrix A. Columns of A are
    // orthogonalized by plane rotations accumulated into V, so A V = U diag(sigma).
    // Singular values come out as the column norms of A V, sorted nonincreasing (stable in
    // the original column order for ties). Accuracy is at the level of machine precision
    // relative to the largest singular value.
    right_singular_system jacobi_svd(const cmat &a);
}

#endif

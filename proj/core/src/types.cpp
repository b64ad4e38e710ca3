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

#include "csipca/types.hpp"

#include <cmath>

namespace csipca
{
    const char *to_string(mode m)
    {
        return m == mode::angular_delay ? "AD" : "EV";
    }

    bool all_finite(const cmat &m)
    {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                    return false;
        return true;
    }

    void normalize_phase(Eigen::Ref<cvec> v)
    {
        Eigen::Index best = -1;
        double best_mag = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            const double mag = std::abs(v(i));
            if (mag > best_mag)
            {
                best_mag = mag;
                best = i;
            }
        }
        if (best < 0)
            return;
        const cplx rotation = std::conj(v(best)) / best_mag;
        v *= rotation;
        v(best) = cplx(best_mag, 0.0);
    }
}

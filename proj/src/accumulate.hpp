// SPDX-License-Identifier: Apache-2.0
//
// plkit - path loss modelling, fitting and validation toolkit
// Copyright (C) 2026 The plkit authors
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

#ifndef PLKIT_SRC_ACCUMULATE_HPP
#define PLKIT_SRC_ACCUMULATE_HPP

#include <cmath>

namespace plkit::detail
{

// Neumaier compensated summation.
class Accumulator
{
  public:
    void add(double value) noexcept
    {
        const double t = m_sum + value;
        if (std::fabs(m_sum) >= std::fabs(value))
            m_compensation += (m_sum - t) + value;
        else
            m_compensation += (value - t) + m_sum;
        m_sum = t;
    }

    Accumulator& operator+=(double value) noexcept
    {
        add(value);
        return *this;
    }

    double value() const noexcept
    {
        return m_sum + m_compensation;
    }

  private:
    double m_sum = 0.0;
    double m_compensation = 0.0;
};

} // namespace plkit::detail

#endif

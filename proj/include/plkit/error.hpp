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

#ifndef PLKIT_ERROR_HPP
#define PLKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace plkit
{

// Numeric values match plkit_status in plkit.h.
enum class ErrorCode
{
    InvalidArgument = 1,
    Domain = 2,
    RankDeficient = 3,
    EmptyInput = 4,
    Format = 5,
    Config = 6,
    Io = 7,
};

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what),
          m_code(code)
    {
    }

    ErrorCode code() const noexcept
    {
        return m_code;
    }

  private:
    ErrorCode m_code;
};

const char* to_string(ErrorCode code) noexcept;

} // namespace plkit

#endif

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

#include "plkit/numfmt.hpp"
#include "plkit/error.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace plkit
{

const char* to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return "invalid argument";
    case ErrorCode::Domain:
        return "domain error";
    case ErrorCode::RankDeficient:
        return "rank deficiency";
    case ErrorCode::EmptyInput:
        return "empty input";
    case ErrorCode::Format:
        return "format error";
    case ErrorCode::Config:
        return "config error";
    case ErrorCode::Io:
        return "i/o error";
    }
    return "unknown error";
}

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{})
        throw Error(ErrorCode::InvalidArgument, "cannot format number");
    return {buf.data(), end};
}

std::string round_half_away(double value, int decimals)
{
    if (!std::isfinite(value))
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    if (decimals < 0)
        decimals = 0;

    // fixed notation of 1e308 needs ~310 characters
    std::array<char, 400> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(value),
                                   std::chars_format::fixed);
    if (ec != std::errc{})
        throw Error(ErrorCode::InvalidArgument, "cannot format number");
    std::string text(buf.data(), end);

    std::string int_part = text;
    std::string frac_part;
    if (auto dot = text.find('.'); dot != std::string::npos)
    {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }

    bool round_up = frac_part.size() > static_cast<std::size_t>(decimals) && frac_part[decimals] >= '5';
    frac_part.resize(decimals, '0');

    std::string digits = int_part + frac_part;
    if (round_up)
    {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i)
        {
            if (digits[i] == '9')
            {
                digits[i] = '0';
            }
            else
            {
                ++digits[i];
                break;
            }
        }
        if (i < 0)
            digits.insert(digits.begin(), '1');
    }

    std::string out = digits.substr(0, digits.size() - decimals);
    if (decimals > 0)
        out += "." + digits.substr(digits.size() - decimals);

    bool all_zero = out.find_first_not_of("0.") == std::string::npos;
    if (value < 0 && !all_zero)
        out.insert(out.begin(), '-');
    return out;
}

std::optional<double> parse_number(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        return std::nullopt;
    if (text.front() == '+')
        text.remove_prefix(1);

    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

} // namespace plkit

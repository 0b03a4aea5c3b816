// SPDX-License-Identifier: Apache-2.0
//
// txcsi: spectral efficiency of multi-antenna links with Tx-Link CSI
// Copyright (C) 2026 The txcsi Authors
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

#ifndef TXCSI_ERRORS_HPP
#define TXCSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace txcsi
{
    // Precondition violated by the caller (bad dimension, out-of-range parameter).
    class invalid_argument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A computation produced a non-finite value, a solver bracket failed, or two
    // independent evaluation routes disagreed beyond their tolerance.
    class numerical_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Malformed configuration text; carries the 1-based line number.
    class parse_error : public std::runtime_error
    {
    public:
        parse_error(const std::string &what, int line)
            : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
        int line() const noexcept { return line_; }

    private:
        int line_;
    };

    // A configuration value is well-formed but violates a field invariant.
    class validation_error : public std::runtime_error
    {
    public:
        validation_error(std::string field, const std::string &what)
            : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif

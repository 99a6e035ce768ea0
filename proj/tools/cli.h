// Copyright 2026 The qec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEC_TOOLS_CLI_H
#define QEC_TOOLS_CLI_H

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qec/dense.h"
#include "qec/oracle.h"

namespace qec::cli {

enum class Format { Text, Json, Csv };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// Thrown for bad flag values; the message names the flag or token.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "x,y,z" or one of 0, 1, plus, plus-i. Norm must be 1 within 1e-6; the
/// result is renormalized.
BlochVector parse_input(const std::string &text);

int run_classify(int n, bool include_a, Format format, std::ostream &out);
int run_reduce(int n, const std::string &keep, const std::string &input, Format format, std::ostream &out);
int run_gamma(int n, int q, Format format, std::ostream &out);
/// Writes the report to `out_path` if set, else to `out`. Summary lines go to `err`.
int run_verify(const VerifyOptions &options, Format format, const std::optional<std::string> &out_path,
               std::ostream &out, std::ostream &err);

/// Full command line entry point; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qec::cli

#endif

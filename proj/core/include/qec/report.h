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

#ifndef QEC_REPORT_H
#define QEC_REPORT_H

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qec/analytic.h"
#include "qec/classifier.h"
#include "qec/oracle.h"

namespace qec {

/// Comma-joined names of the active Bloch channels, e.g. "y" or "x,y,z".
std::string channel_list(const std::array<bool, 3> &active);

nlohmann::json to_json(const VerificationReport &report);
std::string to_csv(const VerificationReport &report);
std::string to_text(const VerificationReport &report);

nlohmann::json to_json(const std::vector<ClassificationRecord> &records, int n, bool include_a);
std::string to_csv(const std::vector<ClassificationRecord> &records);
std::string to_text(const std::vector<ClassificationRecord> &records, int n, bool include_a);

nlohmann::json gamma_json(int n, int q);
std::string gamma_text(int n, int q);

}  // namespace qec

#endif

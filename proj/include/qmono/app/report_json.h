// Copyright 2026 The qmonogamy Authors
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

#ifndef QMONO_APP_REPORT_JSON_H
#define QMONO_APP_REPORT_JSON_H

#include "json.hpp"
#include "qmono/app/verify.h"
#include "qmono/correlations.h"
#include "qmono/monogamy.h"

namespace qmono::app {

using Json = nlohmann::ordered_json;

// Every number is rounded to twelve significant digits.

Json to_json(const OptimizerDiagnostics &d);
Json to_json(const CorrelationReport &r);
Json to_json(const DeficitReport &r);
Json to_json(const ClassificationResult &r);
Json to_json(const RecursionCheck &r);
Json to_json(const VerifyReport &r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

}  // namespace qmono::app

#endif

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

#ifndef QMONO_APP_FORMAT_H
#define QMONO_APP_FORMAT_H

#include <string>

namespace qmono::app {

/// Twelve significant digits ("%.12g").
std::string format_number(double v);

/// v rounded to twelve significant digits, for JSON output.
double round12(double v);

}  // namespace qmono::app

#endif

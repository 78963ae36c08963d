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

#ifndef QMONO_APP_STATE_SELECTOR_H
#define QMONO_APP_STATE_SELECTOR_H

#include <string>

#include "qmono/linalg.h"

namespace qmono::app {

/// Builds a state from a textual selector:
///
///   ghz | w | product          three qubits unless ":n=<int>" is appended
///   psi-tilde:p=<f>,eps=<f>
///   ghz-gen:alpha=<f>
///   w-gen:a=<f>,b=<f>,c=<f>
///   haar:n=<int>,seed=<int>
///   file:<path>
///
/// `default_qubits` replaces the three-qubit default of the first group.
/// Anything else throws ParseError; invalid parameters surface as the
/// library's own errors.
DensityMatrix parse_state_selector(const std::string &text, size_t default_qubits = 3);

}  // namespace qmono::app

#endif

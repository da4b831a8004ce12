// Copyright 2026 The symstab Authors
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

// State files.
//
//   { "n": 3, "dicke": [[re, im], ...] }                       n + 1 entries
//   { "n": 3, "majorana": [{"a": [re, im], "b": [re, im], "mult": 2}, ...] }
//
// Exactly one of "dicke" and "majorana" must be present; other keys are
// ignored. Every problem with the file is reported as FormatError.

#ifndef SYMSTAB_IO_H_
#define SYMSTAB_IO_H_

#include <optional>
#include <string>

#include "symstab/model.h"

namespace symstab {

struct LoadedState {
  SymmetricState state;
  /// Norm of the Dicke vector as written; 1 for Majorana input.
  double input_norm = 1.0;
  bool from_majorana = false;
  std::optional<MajoranaSet> points;  // as given, for Majorana input
};

LoadedState ParseState(const std::string& text);
LoadedState LoadStateFile(const std::string& path);

/// {"n": n, "dicke": [[re, im], ...]}.
std::string StateToJson(const SymmetricState& state);

}  // namespace symstab

#endif  // SYMSTAB_IO_H_

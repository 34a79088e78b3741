// Copyright 2026 The parasol Authors
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

#pragma once

#include <optional>
#include <string>

#include "report.hpp"
#include "soliton.hpp"
#include "specfile.hpp"

namespace parasol {

/// Connection selection shared by most commands: either explicit (a, b),
/// or a named preset, or (default) the Levi-Civita connection.
struct ConnectionChoice {
  std::optional<ConnectionParams> params;
  std::optional<PresetName> preset;
};

struct CommandOutcome {
  int exit_code = 0;  // 0 = all checks pass, 1 = some mathematical check failed
  Json report;
};

CommandOutcome cmd_verify(const LoadedManifold& lm);
CommandOutcome cmd_connection(const LoadedManifold& lm, const ConnectionChoice& choice);
CommandOutcome cmd_curvature(const LoadedManifold& lm, const ConnectionChoice& choice);
CommandOutcome cmd_ricci(const LoadedManifold& lm, const ConnectionChoice& choice);
CommandOutcome cmd_scalar(const LoadedManifold& lm, const ConnectionChoice& choice);
CommandOutcome cmd_soliton(const LoadedManifold& lm, const std::string& x_spec,
                           const ConnectionChoice& choice);
CommandOutcome cmd_crosscheck(const LoadedManifold& lm, int grid_n, bool include_presets,
                              int threads);
CommandOutcome cmd_theorems(const LoadedManifold& lm, const ConnectionChoice& choice);

/// "xi" or comma-separated rationals of the frame dimension.
Tensor parse_vector_spec(const LoadedManifold& lm, const std::string& x_spec);

const char* tool_version();

}  // namespace parasol

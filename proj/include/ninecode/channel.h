// Copyright 2026 The ninecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ninecode/codes.h"
#include "ninecode/decoder.h"
#include "ninecode/pauli_channel.h"

namespace ninecode {

/// Codes applied at levels 1, 2, ... in order.
struct Schedule {
    std::vector<std::string> levels;
    std::string notation;

    /// "(24422)", "24422", "S", "SSSSS" or a comma list of code names. The
    /// leftmost symbol is level 1; '2' is EQ2, '4' is EQ4 and 'S' is SHOR. A
    /// one-symbol schedule repeats `num_levels` times; a longer one is truncated.
    static Schedule parse(std::string_view text, std::optional<int> num_levels = std::nullopt);
};

/// Effective channel after encode, i.i.d. noise `lambda`, decode with `table`, recover.
PauliChannel logical_channel(const CodeSpec& code, const DecoderTable& table, const PauliChannel& lambda);

struct LevelResult {
    int level = 0;
    std::string code;  // empty at level 0
    PauliChannel channel;
};

/// Level 0 is lambda0. Max-likelihood tables are rebuilt from each level's input.
std::vector<LevelResult> concatenate(const Schedule& schedule, const PauliChannel& lambda0, DecoderPolicy policy);

}  // namespace ninecode

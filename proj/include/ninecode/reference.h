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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ninecode/channel.h"
#include "ninecode/decoder.h"
#include "ninecode/pauli_channel.h"
#include "ninecode/statevec.h"

namespace ninecode {

/// Directory holding tables.csv and codewords/, fixed at configure time.
std::filesystem::path default_data_dir();

struct ReferenceRow {
    std::string preset;
    std::string schedule;
    int level = 0;
    PauliChannel channel;
};

/// Reads tables.csv; '#' lines are comments.
std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& file);

/// Sections "[0_L]" and "[1_L]" of a codeword golden file.
std::map<std::string, std::vector<GoldenTerm>> load_golden(const std::filesystem::path& file);

/// Subgroup projection fixtures: THREE_QUBIT, FIVE_QUBIT, STEANE, NINE_QUBIT.
const std::vector<std::string>& subgroup_fixture_names();
SubgroupSpec subgroup_fixture(std::string_view name);
/// Golden file name of a fixture, relative to codewords/.
std::string fixture_golden_file(std::string_view name);

struct Preset {
    std::string name;
    PauliChannel lambda0;
    std::vector<std::string> schedules;
};

const Preset& get_preset(std::string_view name);

/// One compared component of one level.
struct ComparisonEntry {
    std::string schedule;
    int level = 0;
    char component = 'I';  // I, X, Z or Y
    double expected = 0;
    double actual = 0;
    double deviation() const;
};

/// Compares every component of levels 1.. against matching reference rows.
std::vector<ComparisonEntry> compare_with_reference(const std::string& preset, const std::string& schedule,
                                                    const std::vector<LevelResult>& levels,
                                                    const std::vector<ReferenceRow>& reference);

/// CSV with header L,code,lam_II,lam_XX,lam_ZZ,lam_YY,policy,schedule.
std::string results_csv(const std::vector<LevelResult>& levels, DecoderPolicy policy, const std::string& schedule,
                        bool header = true);
/// JSON array of the same rows.
std::string results_json(const std::vector<LevelResult>& levels, DecoderPolicy policy, const std::string& schedule);

/// Shortest decimal that round-trips.
std::string shortest_decimal(double v);

}  // namespace ninecode

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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ninecode {

struct GoldenCheck {
    std::string fixture;
    std::string codeword;  // "0_L" or "1_L"
    int expected_terms = 0;
    int matched_terms = 0;
    bool pass = false;
    std::string detail;
};

/// Projects every subgroup fixture and compares it sign-for-sign with its golden file.
std::vector<GoldenCheck> verify_codeword_goldens(const std::filesystem::path& data_dir);

struct OracleReport {
    int samples = 0;
    int agreements = 0;
    /// Samples whose recovery left the encoded state itself.
    int restored = 0;
    std::vector<std::string> failures;
};

/// Random (code, error, amplitude) triples over EQ2, EQ4 and SHOR. Checks that
/// measured eigenvalues equal the Pauli-frame syndrome and that the recovered
/// state is the encoded state acted on by the predicted logical class.
OracleReport run_oracle_check(int samples, std::uint64_t seed, double tol = 1e-10);

}  // namespace ninecode

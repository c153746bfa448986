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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ninecode/codes.h"
#include "ninecode/pauli.h"
#include "ninecode/pauli_channel.h"

namespace ninecode {

/// Generator measurement outcomes; bit g set means generator g gave -1.
struct Syndrome {
    std::uint32_t bits = 0;
    int num_generators = 0;

    int bit(int g) const { return (bits >> g) & 1; }
    /// S pair of triple t (nine-qubit codes) as (first, second) bits.
    std::pair<int, int> inner_pair(int t) const { return {bit(2 * t), bit(2 * t + 1)}; }
    /// R pair (nine-qubit codes).
    std::pair<int, int> outer_pair() const { return {bit(6), bit(7)}; }
    /// Bits in generator order, e.g. "10000000".
    std::string str() const;

    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

Syndrome extract_syndrome(const CodeSpec& code, const PauliOperator& error);

/// Logical Pauli class. X and Z are bits, so classes compose by XOR.
enum class LogicalClass : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char class_char(LogicalClass c);

/// Class of `net`, which must commute with every generator (std::logic_error otherwise).
LogicalClass logical_class(const CodeSpec& code, const PauliOperator& net);

/// Class bits of any operator, skipping the normalizer check.
int logical_label(const CodeSpec& code, std::uint32_t x_mask, std::uint32_t z_mask);

enum class DecoderPolicy {
    MinWeight,         ///< first hit in canonical order
    MaxLikelihood,     ///< most probable logical coset under an i.i.d. channel
    MinWeightXZFirst,  ///< lowest weight, then Y-free, then canonical order
};

std::string_view policy_name(DecoderPolicy p);
/// Accepts "minweight", "ml", "minweight-xz" and the long names.
DecoderPolicy parse_policy(std::string_view name);

struct DecoderTable {
    std::string code;
    DecoderPolicy policy = DecoderPolicy::MinWeight;
    std::optional<PauliChannel> channel;
    std::vector<PauliOperator> entries;
    /// Class bits of each entry, as logical_label.
    std::vector<std::uint8_t> labels;

    std::size_t size() const { return entries.size(); }
};

/// Every Pauli error of a code tallied by syndrome, class bits, and letter counts.
class ErrorCensus {
  public:
    explicit ErrorCensus(const CodeSpec& code, int threads = 0);

    int num_qubits() const { return n_; }
    std::size_t num_syndromes() const { return num_syndromes_; }

    /// Total probability of every (syndrome, label) cell, indexed s * 4 + label.
    std::vector<double> cell_weights(const PauliChannel& lambda) const;

    /// First error in canonical order with the given syndrome and label.
    const PauliOperator& representative(std::uint32_t syndrome, int label) const {
        return reps_[syndrome * 4 + label];
    }
    std::uint64_t representative_rank(std::uint32_t syndrome, int label) const {
        return rep_rank_[syndrome * 4 + label];
    }

  private:
    int n_ = 0;
    std::size_t num_syndromes_ = 0;
    std::vector<std::array<int, 3>> compositions_;
    std::vector<std::uint32_t> counts_;  // [(s * 4 + label) * compositions + c]
    std::vector<PauliOperator> reps_;
    std::vector<std::uint64_t> rep_rank_;
};

/// Cached census for a catalog code.
const ErrorCensus& error_census(const CodeSpec& code);

/// Worker threads: NINECODE_THREADS if set, else hardware concurrency.
int default_thread_count();

DecoderTable build_table(const CodeSpec& code, DecoderPolicy policy,
                         const std::optional<PauliChannel>& lambda = std::nullopt);

const PauliOperator& decode(const DecoderTable& table, const Syndrome& s);

/// Outcome of one case-family instance.
struct FamilyCase {
    std::string family;
    std::string error;
    std::string syndrome;
    bool pass = true;
    std::string detail;
};

struct CaseFamilyReport {
    std::string code;
    std::vector<FamilyCase> cases;
    /// family -> (instances, failures)
    std::map<std::string, std::pair<int, int>> per_family;
    int conflicts_checked = 0;
    int conflict_failures = 0;
    /// Equal-syndrome pairs of distinct class between families not marked as conflicting.
    int unmarked_collisions = 0;
    std::vector<std::string> unmarked_examples;

    int failures() const;
    bool ok() const { return failures() == 0 && conflict_failures == 0; }
};

/// Case families (I)-(IV) with qubits i, j, m in distinct triples. EQ2 uses
/// the bit-flip-inner families; EQ4 the same families with X and Z exchanged.
CaseFamilyReport verify_case_families(const CodeSpec& code);

/// 256 rows for nine-qubit codes: syndrome, recovery, weight, class, and the
/// lowest canonical representative of each logical coset relative to the recovery.
std::string syndrome_table_csv(const CodeSpec& code, const DecoderTable& table);

}  // namespace ninecode

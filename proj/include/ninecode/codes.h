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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ninecode/pauli.h"
#include "ninecode/statevec.h"

namespace ninecode {

/// A stabilizer code encoding one logical qubit.
struct CodeSpec {
    std::string name;
    int n = 0;
    std::vector<PauliOperator> generators;
    PauliOperator logical_x;
    PauliOperator logical_z;
    /// Equivalent representatives, canonical excluded.
    std::vector<PauliOperator> alt_logical_x;
    std::vector<PauliOperator> alt_logical_z;
    EncodingRecipe recipe;

    bool is_nine_qubit() const { return n == 9; }
    /// 0-based triple index of 0-based qubit q (nine-qubit codes).
    static int triple_of(int q) { return q / 3; }

    SubgroupSpec stabilizer() const { return {n, generators}; }
    /// Throws std::logic_error when an invariant fails.
    void validate() const;
};

/// B1, B2, P1, P2 followed by the eight nine-qubit combinations.
const std::vector<std::string>& catalog_names();

/// Also accepts the combination spelling of a named code ("P2B1" for EQ2).
const CodeSpec& get_code(std::string_view name);

/// Outer code across triples 1-3, 4-6, 7-9; inner code within each triple.
CodeSpec build_nine_qubit(ThreeQubitId outer, ThreeQubitId inner);

/// True when p equals a stabilizer group element up to phase.
bool in_stabilizer_group(const CodeSpec& code, const PauliOperator& p);

/// Codewords |0_L>, |1_L> from the encoding recipe.
std::pair<StateVector, StateVector> codewords(const CodeSpec& code);

enum class Effectiveness { CorrectsAllSingleQubit, BitFlipOnly, PhaseFlipOnly, None };

std::string_view effectiveness_name(Effectiveness e);

/// Knill-Laflamme check over the weight <= 1 Paulis.
Effectiveness classify_effectiveness(const CodeSpec& code);

/// Swaps X and Z on every generator; the logical roles swap with them.
CodeSpec conjugate_transversal_h(const CodeSpec& code);

enum class TransformKind { LogicalH, TransversalH, SubgroupCombination };

std::string_view transform_name(TransformKind k);

struct CodeTransform {
    TransformKind kind;
    std::string source;
    std::string target;
};

const std::vector<CodeTransform>& registered_transforms();

/// Source codewords after the transform's state action.
std::pair<StateVector, StateVector> transform_codewords(TransformKind kind, const CodeSpec& source);

/// Returns the target spec once the state-level action on the source
/// codewords reproduces the target codewords. Throws std::logic_error otherwise.
CodeSpec apply_transform(const CodeTransform& t);

/// {"name", "n", "generators", "logical_x", "logical_z", "alt_logical_x", "alt_logical_z", "recipe", "effectiveness"}
std::string code_to_json(const CodeSpec& code, int indent = 2);

}  // namespace ninecode

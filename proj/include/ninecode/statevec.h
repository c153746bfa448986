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
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ninecode/pauli.h"

namespace ninecode {

using Amplitude = std::complex<double>;

/// Raised by project_subgroup when the projector annihilates the seed.
struct SeedNotInCodeSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by measure_stabilizer on a state that is not an eigenstate.
struct NotInSyndromeSector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense state over n <= 12 qubits. Qubit 1 is the most significant bit of
/// the basis index, so index 0b100 on three qubits is |100>.
class StateVector {
  public:
    StateVector() = default;
    /// |0...0>.
    explicit StateVector(int num_qubits);
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    /// Basis state from a bit string such as "000111".
    static StateVector basis(std::string_view bits);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }
    Amplitude amplitude(std::string_view bits) const;

    double norm() const;
    /// Throws if the vector is (numerically) zero.
    void normalize();

    void apply_h(int q);
    void apply_cnot(int control, int target);

    StateVector& operator+=(const StateVector& other);
    StateVector& operator*=(Amplitude c);

    /// Index of 0-indexed qubit q inside a basis index.
    int index_bit(int q) const { return n_ - 1 - q; }
    std::string bitstring(std::size_t index) const;

  private:
    int n_ = 0;
    std::vector<Amplitude> amps_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator*(Amplitude c, StateVector v);

/// <a|b>.
Amplitude inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|^2 for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

StateVector apply_pauli(const StateVector& v, const PauliOperator& p);

struct Measurement {
    int eigenvalue;
    StateVector post_state;
};

Measurement measure_stabilizer(const StateVector& v, const PauliOperator& g, double tol = 1e-10);

/// Commuting, independent Pauli generators.
struct SubgroupSpec {
    int num_qubits = 0;
    std::vector<PauliOperator> generators;

    /// Throws std::invalid_argument on non-commuting or dependent generators.
    void validate() const;
    /// All 2^k products, ordered by number of factors then lexicographically
    /// by generator index.
    std::vector<PauliOperator> elements() const;
};

/// normalize(sum_g g|seed>), seed being all zeros or all ones.
StateVector project_subgroup(const SubgroupSpec& s, std::string_view seed);

/// GF(2) rank of the symplectic vectors of `ops` (phases ignored).
int symplectic_rank(const std::vector<PauliOperator>& ops);

/// Encoders of the four three-qubit codes.
enum class ThreeQubitId { B1, B2, P1, P2 };

std::string_view three_qubit_name(ThreeQubitId id);
std::optional<ThreeQubitId> parse_three_qubit_id(std::string_view name);

/// A single three-qubit encoder, or an outer encoder on qubits 1,4,7 followed
/// by the inner encoder on every triple.
struct EncodingRecipe {
    ThreeQubitId outer;
    std::optional<ThreeQubitId> inner;

    int num_qubits() const { return inner ? 9 : 3; }
    std::string str() const;
    friend bool operator==(const EncodingRecipe&, const EncodingRecipe&) = default;
};

/// Runs encoder `id` with data on qubits[0] and ancillas qubits[1], qubits[2] in |0>.
void apply_three_qubit_encoder(StateVector& v, ThreeQubitId id, std::array<int, 3> qubits);

/// a|0_L> + b|1_L>.
StateVector encode(Amplitude a, Amplitude b, const EncodingRecipe& recipe);

/// One basis term i^phase / sqrt(2)^exponent |bits>.
struct GoldenTerm {
    std::string bits;
    int phase = 0;
    int exponent = 0;
    friend bool operator==(const GoldenTerm&, const GoldenTerm&) = default;
};

/// Terms of `v` in basis order. Throws std::domain_error when an amplitude is
/// not of the form i^k / sqrt(2)^e.
std::vector<GoldenTerm> golden_terms(const StateVector& v, double tol = 1e-9);
/// Terms of the projection in the order the subgroup elements first reach them.
std::vector<GoldenTerm> golden_terms_in_group_order(const SubgroupSpec& s, std::string_view seed);

/// "+|0110> 2"
std::string format_golden_term(const GoldenTerm& t);
GoldenTerm parse_golden_term(std::string_view line);

}  // namespace ninecode

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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ninecode {

inline constexpr int kMaxQubits = 16;

/// Single-qubit Pauli letter. Enumerator order is the canonical letter order.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);

/// An n-qubit Pauli operator i^phase * P_1 ... P_n in binary symplectic form.
///
/// Bit q of the masks is qubit q+1. A qubit with both bits set carries the
/// Hermitian letter Y, so the phase exponent is relative to letters in
/// {I, X, Y, Z} and "+Y1" has phase 0.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(int num_qubits);
    PauliOperator(int num_qubits, std::uint32_t x_mask, std::uint32_t z_mask, int phase = 0);

    /// Letter `l` on 0-indexed qubit `q`, identity elsewhere.
    static PauliOperator single(int num_qubits, int q, Letter l);
    /// Parses "+X1X2X3", "-iY2Z5", "Z1", "+I". Qubit labels are 1-indexed.
    static PauliOperator parse(std::string_view text, int num_qubits);

    int num_qubits() const { return n_; }
    std::uint32_t x_mask() const { return x_; }
    std::uint32_t z_mask() const { return z_; }
    int phase() const { return phase_; }
    Letter letter(int q) const;

    int weight() const;
    bool has_y() const { return (x_ & z_) != 0; }
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    PauliOperator with_phase(int phase) const;
    /// Drops the phase, keeping the letters.
    PauliOperator unsigned_part() const { return with_phase(0); }

    /// Text form, e.g. "+X1X2X3", "-iY2Z5", "+I".
    std::string str() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  private:
    int n_ = 0;
    std::uint32_t x_ = 0;
    std::uint32_t z_ = 0;
    int phase_ = 0;
};

/// Product pq with exact phase.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) { return multiply(p, q); }

bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Symplectic inner product of raw masks, as a parity bit.
inline int anticommute_bit(std::uint32_t x1, std::uint32_t z1, std::uint32_t x2, std::uint32_t z2) {
    return __builtin_parity((x1 & z2) ^ (z1 & x2));
}

/// Visits every Pauli of weight <= max_weight in canonical order: weight
/// ascending, support lexicographic, then letters X < Z < Y with the lowest
/// qubit most significant. Phases are all +1.
void for_each_pauli(int num_qubits, int max_weight, const std::function<void(const PauliOperator&)>& fn);

std::vector<PauliOperator> enumerate_paulis(int num_qubits, int max_weight);

}  // namespace ninecode

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

#include "ninecode/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ninecode {

namespace {

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

void check_size(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
    }
}

void check_same_size(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()));
    }
}

}  // namespace

char letter_char(Letter l) {
    switch (l) {
        case Letter::I: return 'I';
        case Letter::X: return 'X';
        case Letter::Z: return 'Z';
        case Letter::Y: return 'Y';
    }
    return '?';
}

PauliOperator::PauliOperator(int num_qubits) : n_(num_qubits) { check_size(num_qubits); }

PauliOperator::PauliOperator(int num_qubits, std::uint32_t x_mask, std::uint32_t z_mask, int phase)
    : n_(num_qubits), x_(x_mask), z_(z_mask), phase_(phase & 3) {
    check_size(num_qubits);
    if (((x_mask | z_mask) & ~full_mask(num_qubits)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond qubit count");
    }
}

PauliOperator PauliOperator::single(int num_qubits, int q, Letter l) {
    if (q < 0 || q >= num_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    auto v = static_cast<unsigned>(l);
    return {num_qubits, (v & 1u) << q, ((v >> 1) & 1u) << q};
}

Letter PauliOperator::letter(int q) const {
    unsigned x = (x_ >> q) & 1u;
    unsigned z = (z_ >> q) & 1u;
    return static_cast<Letter>(x | (z << 1));
}

int PauliOperator::weight() const { return std::popcount(x_ | z_); }

PauliOperator PauliOperator::with_phase(int phase) const { return {n_, x_, z_, phase}; }

std::string PauliOperator::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    if (is_identity()) {
        out += 'I';
        return out;
    }
    for (int q = 0; q < n_; ++q) {
        Letter l = letter(q);
        if (l != Letter::I) {
            out += letter_char(l);
            out += std::to_string(q + 1);
        }
    }
    return out;
}

PauliOperator PauliOperator::parse(std::string_view text, int num_qubits) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("cannot parse Pauli '" + std::string(text) + "': " + why);
    };
    std::size_t k = 0;
    int phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') phase = 2;
        ++k;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        ++k;
    }
    if (k == text.size()) fail("no operator");
    PauliOperator result(num_qubits);
    result.phase_ = phase & 3;
    if (text.substr(k) == "I") return result;
    while (k < text.size()) {
        Letter l;
        switch (text[k]) {
            case 'X': l = Letter::X; break;
            case 'Y': l = Letter::Y; break;
            case 'Z': l = Letter::Z; break;
            default: fail("expected X, Y or Z");
        }
        ++k;
        int label = 0;
        std::size_t digits = 0;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') {
            label = label * 10 + (text[k] - '0');
            ++k;
            if (++digits > 2) fail("qubit label too long");
        }
        if (digits == 0) fail("missing qubit label");
        if (label < 1 || label > num_qubits) fail("qubit label out of range");
        std::uint32_t bit = 1u << (label - 1);
        if ((result.x_ | result.z_) & bit) fail("repeated qubit");
        auto v = static_cast<unsigned>(l);
        if (v & 1u) result.x_ |= bit;
        if (v & 2u) result.z_ |= bit;
    }
    return result;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    check_same_size(p, q);
    std::uint32_t x1 = p.x_mask(), z1 = p.z_mask();
    std::uint32_t x2 = q.x_mask(), z2 = q.z_mask();
    std::uint32_t nx = x1 ^ x2;
    std::uint32_t nz = z1 ^ z2;
    // Each anticommuting site contributes +i or -i.
    std::uint32_t x1z2 = x1 & z2;
    std::uint32_t anti = (x2 & z1) ^ x1z2;
    std::uint32_t minus = (nx ^ nz ^ x1z2) & anti;
    int log_i = p.phase() + q.phase() + std::popcount(anti) + 2 * std::popcount(minus);
    return {p.num_qubits(), nx, nz, log_i};
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    check_same_size(p, q);
    return anticommute_bit(p.x_mask(), p.z_mask(), q.x_mask(), q.z_mask()) == 0;
}

void for_each_pauli(int num_qubits, int max_weight, const std::function<void(const PauliOperator&)>& fn) {
    check_size(num_qubits);
    if (max_weight > num_qubits) max_weight = num_qubits;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<int> support(w);
        for (int i = 0; i < w; ++i) support[i] = i;
        std::vector<int> digits(w);
        while (true) {
            std::fill(digits.begin(), digits.end(), 0);
            while (true) {
                std::uint32_t x = 0, z = 0;
                for (int i = 0; i < w; ++i) {
                    // digit 0,1,2 -> X,Z,Y
                    std::uint32_t bit = 1u << support[i];
                    if (digits[i] != 1) x |= bit;
                    if (digits[i] != 0) z |= bit;
                }
                fn(PauliOperator(num_qubits, x, z));
                int i = w - 1;
                while (i >= 0 && digits[i] == 2) digits[i--] = 0;
                if (i < 0) break;
                ++digits[i];
            }
            int i = w - 1;
            while (i >= 0 && support[i] == num_qubits - w + i) --i;
            if (i < 0) break;
            ++support[i];
            for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
}

std::vector<PauliOperator> enumerate_paulis(int num_qubits, int max_weight) {
    std::vector<PauliOperator> out;
    for_each_pauli(num_qubits, max_weight, [&](const PauliOperator& p) { out.push_back(p); });
    return out;
}

}  // namespace ninecode

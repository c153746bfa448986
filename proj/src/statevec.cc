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

#include "ninecode/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

namespace ninecode {

namespace {

constexpr int kMaxStateQubits = 12;

constexpr Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint32_t reverse_bits(std::uint32_t mask, int n) {
    std::uint32_t out = 0;
    for (int q = 0; q < n; ++q) {
        if ((mask >> q) & 1u) out |= 1u << (n - 1 - q);
    }
    return out;
}

void check_qubit(const StateVector& v, int q) {
    if (q < 0 || q >= v.num_qubits()) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
        throw std::invalid_argument("state vector qubit count out of range");
    }
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amps_[0] = 1;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes) : StateVector(num_qubits) {
    if (amplitudes.size() != amps_.size()) throw std::invalid_argument("amplitude count mismatch");
    amps_ = std::move(amplitudes);
}

StateVector StateVector::basis(std::string_view bits) {
    StateVector v(static_cast<int>(bits.size()));
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("basis string must be binary");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    v.amps_[0] = 0;
    v.amps_[index] = 1;
    return v;
}

Amplitude StateVector::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != n_) throw std::invalid_argument("basis string length mismatch");
    std::size_t index = 0;
    for (char c : bits) index = (index << 1) | static_cast<std::size_t>(c == '1');
    return amps_[index];
}

std::string StateVector::bitstring(std::size_t index) const {
    std::string s(n_, '0');
    for (int q = 0; q < n_; ++q) {
        if ((index >> index_bit(q)) & 1u) s[q] = '1';
    }
    return s;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm < 1e-12) throw std::domain_error("cannot normalize a zero vector");
    for (auto& a : amps_) a /= nrm;
}

void StateVector::apply_h(int q) {
    check_qubit(*this, q);
    const double s = std::numbers::sqrt2 / 2;
    std::size_t bit = std::size_t{1} << index_bit(q);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        Amplitude a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = s * (a0 + a1);
        amps_[i | bit] = s * (a0 - a1);
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(*this, control);
    check_qubit(*this, target);
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    std::size_t cb = std::size_t{1} << index_bit(control);
    std::size_t tb = std::size_t{1} << index_bit(target);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
    }
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (other.n_ != n_) throw std::invalid_argument("state size mismatch");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

StateVector& StateVector::operator*=(Amplitude c) {
    for (auto& a : amps_) a *= c;
    return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator*(Amplitude c, StateVector v) { return v *= c; }

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("state size mismatch");
    Amplitude s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

StateVector apply_pauli(const StateVector& v, const PauliOperator& p) {
    if (p.num_qubits() != v.num_qubits()) throw std::invalid_argument("Pauli/state size mismatch");
    int n = v.num_qubits();
    std::uint32_t xi = reverse_bits(p.x_mask(), n);
    std::uint32_t zi = reverse_bits(p.z_mask(), n);
    // Y = iXZ: Z acts first, then X, with one factor of i per Y.
    Amplitude global = kIPow[(p.phase() + std::popcount(p.x_mask() & p.z_mask())) & 3];
    std::vector<Amplitude> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Amplitude a = v[i] * global;
        if (std::popcount(static_cast<std::uint32_t>(i) & zi) & 1) a = -a;
        out[i ^ xi] = a;
    }
    return {n, std::move(out)};
}

Measurement measure_stabilizer(const StateVector& v, const PauliOperator& g, double tol) {
    StateVector gv = apply_pauli(v, g);
    Amplitude ev = inner_product(v, gv);
    int sign = ev.real() >= 0 ? 1 : -1;
    double residual = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) residual += std::norm(gv[i] - static_cast<double>(sign) * v[i]);
    if (std::sqrt(residual) > tol) {
        throw NotInSyndromeSector("state not in a syndrome sector of " + g.str());
    }
    StateVector post = v + static_cast<double>(sign) * gv;
    post.normalize();
    return {sign, std::move(post)};
}

int symplectic_rank(const std::vector<PauliOperator>& ops) {
    std::vector<std::uint64_t> rows;
    for (const auto& p : ops) rows.push_back(std::uint64_t{p.x_mask()} | (std::uint64_t{p.z_mask()} << 32));
    int rank = 0;
    for (int bit = 0; bit < 64 && rank < static_cast<int>(rows.size()); ++bit) {
        std::uint64_t m = std::uint64_t{1} << bit;
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r & m; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != rank && (rows[i] & m)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

void SubgroupSpec::validate() const {
    for (const auto& g : generators) {
        if (g.num_qubits() != num_qubits) throw std::invalid_argument("generator size mismatch");
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("generators " + generators[i].str() + " and " + generators[j].str() +
                                            " do not commute");
            }
        }
    }
    if (symplectic_rank(generators) != static_cast<int>(generators.size())) {
        throw std::invalid_argument("generators are not independent");
    }
}

std::vector<PauliOperator> SubgroupSpec::elements() const {
    std::size_t k = generators.size();
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 0; s < (1u << k); ++s) subsets.push_back(s);
    // Fewer factors first; within a size, lexicographic in generator index.
    auto key = [](std::uint32_t s) {
        std::uint32_t rev = 0;
        for (int b = 0; b < 32; ++b) {
            if ((s >> b) & 1u) rev |= 1u << (31 - b);
        }
        return std::pair{std::popcount(s), ~rev};
    };
    std::stable_sort(subsets.begin(), subsets.end(), [&](auto a, auto b) { return key(a) < key(b); });
    std::vector<PauliOperator> out;
    for (auto s : subsets) {
        PauliOperator g(num_qubits);
        for (std::size_t i = 0; i < k; ++i) {
            if ((s >> i) & 1u) g = g * generators[i];
        }
        out.push_back(g);
    }
    return out;
}

StateVector project_subgroup(const SubgroupSpec& s, std::string_view seed) {
    s.validate();
    if (static_cast<int>(seed.size()) != s.num_qubits) throw std::invalid_argument("seed length mismatch");
    if (seed.find_first_not_of(seed.front()) != std::string_view::npos) {
        throw std::invalid_argument("seed must be all zeros or all ones");
    }
    StateVector start = StateVector::basis(seed);
    StateVector sum(s.num_qubits, std::vector<Amplitude>(start.dim()));
    for (const auto& g : s.elements()) sum += apply_pauli(start, g);
    if (sum.norm() < 1e-9) throw SeedNotInCodeSpace("seed |" + std::string(seed) + "> not in code space");
    sum.normalize();
    return sum;
}

std::string_view three_qubit_name(ThreeQubitId id) {
    switch (id) {
        case ThreeQubitId::B1: return "B1";
        case ThreeQubitId::B2: return "B2";
        case ThreeQubitId::P1: return "P1";
        case ThreeQubitId::P2: return "P2";
    }
    return "?";
}

std::optional<ThreeQubitId> parse_three_qubit_id(std::string_view name) {
    for (auto id : {ThreeQubitId::B1, ThreeQubitId::B2, ThreeQubitId::P1, ThreeQubitId::P2}) {
        if (three_qubit_name(id) == name) return id;
    }
    return std::nullopt;
}

std::string EncodingRecipe::str() const {
    std::string s(three_qubit_name(outer));
    if (inner) s += three_qubit_name(*inner);
    return s;
}

void apply_three_qubit_encoder(StateVector& v, ThreeQubitId id, std::array<int, 3> qubits) {
    auto [a, b, c] = qubits;
    bool logical_h = id == ThreeQubitId::B2 || id == ThreeQubitId::P2;
    bool transversal_h = id == ThreeQubitId::P1 || id == ThreeQubitId::P2;
    if (logical_h) v.apply_h(a);
    v.apply_cnot(a, b);
    v.apply_cnot(a, c);
    if (transversal_h) {
        for (int q : qubits) v.apply_h(q);
    }
}

StateVector encode(Amplitude a, Amplitude b, const EncodingRecipe& recipe) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw std::invalid_argument("encode: |a|^2 + |b|^2 must equal 1");
    }
    int n = recipe.num_qubits();
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[0] = a;
    amps[std::size_t{1} << (n - 1)] = b;
    StateVector v(n, std::move(amps));
    if (!recipe.inner) {
        apply_three_qubit_encoder(v, recipe.outer, {0, 1, 2});
        return v;
    }
    apply_three_qubit_encoder(v, recipe.outer, {0, 3, 6});
    for (int t = 0; t < 3; ++t) apply_three_qubit_encoder(v, *recipe.inner, {3 * t, 3 * t + 1, 3 * t + 2});
    return v;
}

std::vector<GoldenTerm> golden_terms(const StateVector& v, double tol) {
    std::vector<GoldenTerm> out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Amplitude a = v[i];
        double mag = std::abs(a);
        if (mag < tol) continue;
        int e = static_cast<int>(std::lround(-2.0 * std::log2(mag)));
        if (e < 0 || std::abs(mag - std::pow(2.0, -e / 2.0)) > tol) {
            throw std::domain_error("amplitude is not a power of 1/sqrt(2)");
        }
        Amplitude unit = a / mag;
        int phase = -1;
        for (int k = 0; k < 4; ++k) {
            if (std::abs(unit - kIPow[k]) < tol) phase = k;
        }
        if (phase < 0) throw std::domain_error("amplitude phase is not a power of i");
        out.push_back({v.bitstring(i), phase, e});
    }
    return out;
}

std::vector<GoldenTerm> golden_terms_in_group_order(const SubgroupSpec& s, std::string_view seed) {
    StateVector v = project_subgroup(s, seed);
    std::map<std::string, GoldenTerm> by_bits;
    for (auto& t : golden_terms(v)) by_bits.emplace(t.bits, t);
    StateVector start = StateVector::basis(seed);
    std::size_t start_index = seed.front() == '1' ? start.dim() - 1 : 0;
    std::vector<GoldenTerm> out;
    for (const auto& g : s.elements()) {
        std::size_t index = start_index ^ reverse_bits(g.x_mask(), s.num_qubits);
        std::string bits = start.bitstring(index);
        auto it = by_bits.find(bits);
        if (it != by_bits.end()) {
            out.push_back(it->second);
            by_bits.erase(it);
        }
    }
    return out;
}

std::string format_golden_term(const GoldenTerm& t) {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    return std::string(kPrefix[t.phase & 3]) + "|" + t.bits + "⟩ " + std::to_string(t.exponent);
}

GoldenTerm parse_golden_term(std::string_view line) {
    auto fail = [&] { throw std::invalid_argument("bad golden term: " + std::string(line)); };
    GoldenTerm t;
    std::size_t k = 0;
    if (k < line.size() && (line[k] == '+' || line[k] == '-')) {
        t.phase = line[k] == '-' ? 2 : 0;
        ++k;
    } else {
        fail();
    }
    if (k < line.size() && line[k] == 'i') {
        t.phase += 1;
        ++k;
    }
    if (k >= line.size() || line[k] != '|') fail();
    ++k;
    while (k < line.size() && (line[k] == '0' || line[k] == '1')) t.bits += line[k++];
    std::string_view rest = line.substr(k);
    constexpr std::string_view kKet = "⟩";
    if (rest.starts_with(kKet)) {
        rest.remove_prefix(kKet.size());
    } else if (rest.starts_with(">")) {
        rest.remove_prefix(1);
    } else {
        fail();
    }
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.empty() || t.bits.empty()) fail();
    t.exponent = 0;
    for (char c : rest) {
        if (c == ' ' || c == '\r') break;
        if (c < '0' || c > '9') fail();
        t.exponent = t.exponent * 10 + (c - '0');
    }
    return t;
}

}  // namespace ninecode

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

#include "ninecode/decoder.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ninecode {

namespace {

std::uint32_t syndrome_bits(const CodeSpec& code, std::uint32_t x, std::uint32_t z) {
    std::uint32_t bits = 0;
    for (std::size_t g = 0; g < code.generators.size(); ++g) {
        const auto& gen = code.generators[g];
        bits |= static_cast<std::uint32_t>(anticommute_bit(x, z, gen.x_mask(), gen.z_mask())) << g;
    }
    return bits;
}

}  // namespace

std::string Syndrome::str() const {
    std::string s(num_generators, '0');
    for (int g = 0; g < num_generators; ++g) {
        if (bit(g)) s[g] = '1';
    }
    return s;
}

Syndrome extract_syndrome(const CodeSpec& code, const PauliOperator& error) {
    if (error.num_qubits() != code.n) throw std::invalid_argument("error size does not match code");
    return {syndrome_bits(code, error.x_mask(), error.z_mask()), static_cast<int>(code.generators.size())};
}

char class_char(LogicalClass c) { return "IXZY"[static_cast<int>(c)]; }

int logical_label(const CodeSpec& code, std::uint32_t x, std::uint32_t z) {
    int bx = anticommute_bit(x, z, code.logical_z.x_mask(), code.logical_z.z_mask());
    int bz = anticommute_bit(x, z, code.logical_x.x_mask(), code.logical_x.z_mask());
    return bx | (bz << 1);
}

LogicalClass logical_class(const CodeSpec& code, const PauliOperator& net) {
    if (extract_syndrome(code, net).bits != 0) {
        throw std::logic_error("operator " + net.str() + " is outside the normalizer of " + code.name);
    }
    return static_cast<LogicalClass>(logical_label(code, net.x_mask(), net.z_mask()));
}

std::string_view policy_name(DecoderPolicy p) {
    switch (p) {
        case DecoderPolicy::MinWeight: return "min_weight";
        case DecoderPolicy::MaxLikelihood: return "max_likelihood";
        case DecoderPolicy::MinWeightXZFirst: return "min_weight_xz";
    }
    return "?";
}

DecoderPolicy parse_policy(std::string_view name) {
    if (name == "minweight" || name == "min_weight") return DecoderPolicy::MinWeight;
    if (name == "ml" || name == "max_likelihood") return DecoderPolicy::MaxLikelihood;
    if (name == "minweight-xz" || name == "min_weight_xz") return DecoderPolicy::MinWeightXZFirst;
    throw std::invalid_argument("unknown decoder policy: " + std::string(name));
}

int default_thread_count() {
    if (const char* env = std::getenv("NINECODE_THREADS")) {
        int v = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ErrorCensus::ErrorCensus(const CodeSpec& code, int threads) : n_(code.n) {
    num_syndromes_ = std::size_t{1} << code.generators.size();
    std::vector<int> comp_index((n_ + 1) * (n_ + 1) * (n_ + 1), -1);
    for (int a = 0; a <= n_; ++a) {
        for (int b = 0; a + b <= n_; ++b) {
            for (int c = 0; a + b + c <= n_; ++c) {
                comp_index[(a * (n_ + 1) + b) * (n_ + 1) + c] = static_cast<int>(compositions_.size());
                compositions_.push_back({a, b, c});
            }
        }
    }
    const std::size_t ncomp = compositions_.size();
    const std::size_t cells = num_syndromes_ * 4 * ncomp;
    const std::uint64_t total = std::uint64_t{1} << (2 * n_);
    const std::uint32_t mask = (1u << n_) - 1u;

    if (threads <= 0) threads = default_thread_count();
    threads = static_cast<int>(std::min<std::uint64_t>(threads, total));
    std::vector<std::vector<std::uint32_t>> partial(threads);
    auto work = [&](int t) {
        auto& local = partial[t];
        local.assign(cells, 0);
        std::uint64_t lo = total * t / threads;
        std::uint64_t hi = total * (t + 1) / threads;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto x = static_cast<std::uint32_t>(idx) & mask;
            auto z = static_cast<std::uint32_t>(idx >> n_);
            std::uint32_t s = syndrome_bits(code, x, z);
            int label = logical_label(code, x, z);
            int nx = std::popcount(x & ~z), nz = std::popcount(z & ~x), ny = std::popcount(x & z);
            int c = comp_index[(nx * (n_ + 1) + nz) * (n_ + 1) + ny];
            ++local[(s * 4 + label) * ncomp + c];
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
        work(0);
    }
    counts_ = std::move(partial[0]);
    for (int t = 1; t < threads; ++t) {
        for (std::size_t i = 0; i < cells; ++i) counts_[i] += partial[t][i];
    }

    reps_.assign(num_syndromes_ * 4, PauliOperator(n_));
    rep_rank_.assign(num_syndromes_ * 4, ~std::uint64_t{0});
    std::uint64_t rank = 0;
    for_each_pauli(n_, n_, [&](const PauliOperator& p) {
        std::size_t cell = syndrome_bits(code, p.x_mask(), p.z_mask()) * 4 + logical_label(code, p.x_mask(), p.z_mask());
        if (rep_rank_[cell] == ~std::uint64_t{0}) {
            reps_[cell] = p;
            rep_rank_[cell] = rank;
        }
        ++rank;
    });
}

std::vector<double> ErrorCensus::cell_weights(const PauliChannel& lambda) const {
    std::vector<std::array<double, 4>> powers(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
        for (int l = 0; l < 4; ++l) powers[k][l] = std::pow(lambda[l], k);
    }
    std::vector<double> term(compositions_.size());
    for (std::size_t c = 0; c < compositions_.size(); ++c) {
        auto [a, b, d] = compositions_[c];
        term[c] = powers[n_ - a - b - d][0] * powers[a][1] * powers[b][2] * powers[d][3];
    }
    const std::size_t ncomp = compositions_.size();
    std::vector<double> out(num_syndromes_ * 4);
    for (std::size_t cell = 0; cell < out.size(); ++cell) {
        // Neumaier summation.
        double sum = 0, comp = 0;
        const std::uint32_t* row = &counts_[cell * ncomp];
        for (std::size_t c = 0; c < ncomp; ++c) {
            if (row[c] == 0) continue;
            double v = static_cast<double>(row[c]) * term[c];
            double t = sum + v;
            comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
            sum = t;
        }
        out[cell] = sum + comp;
    }
    return out;
}

const ErrorCensus& error_census(const CodeSpec& code) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ErrorCensus>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[code.name];
    if (!slot) slot = std::make_unique<ErrorCensus>(code);
    return *slot;
}

DecoderTable build_table(const CodeSpec& code, DecoderPolicy policy, const std::optional<PauliChannel>& lambda) {
    const std::size_t num_syndromes = std::size_t{1} << code.generators.size();
    DecoderTable table;
    table.code = code.name;
    table.policy = policy;
    table.entries.assign(num_syndromes, PauliOperator(code.n));
    std::vector<bool> filled(num_syndromes, false);

    if (policy == DecoderPolicy::MaxLikelihood) {
        if (!lambda) throw std::invalid_argument("max_likelihood decoding needs a channel");
        lambda->validate(1e-9);
        table.channel = lambda;
        const ErrorCensus& census = error_census(code);
        std::vector<double> w = census.cell_weights(*lambda);
        for (std::uint32_t s = 0; s < num_syndromes; ++s) {
            std::array<int, 4> order = {0, 1, 2, 3};
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return census.representative_rank(s, a) < census.representative_rank(s, b);
            });
            int best = order[0];
            for (int label : order) {
                double a = w[s * 4 + label], b = w[s * 4 + best];
                if (a > b * (1 + 1e-12) + 1e-300) best = label;
            }
            table.entries[s] = census.representative(s, best);
            filled[s] = true;
        }
    } else {
        const bool y_last = policy == DecoderPolicy::MinWeightXZFirst;
        for_each_pauli(code.n, code.n, [&](const PauliOperator& p) {
            std::uint32_t s = syndrome_bits(code, p.x_mask(), p.z_mask());
            if (!filled[s]) {
                table.entries[s] = p;
                filled[s] = true;
            } else if (y_last && table.entries[s].has_y() && !p.has_y() &&
                       table.entries[s].weight() == p.weight()) {
                table.entries[s] = p;
            }
        });
    }
    if (!std::all_of(filled.begin(), filled.end(), [](bool b) { return b; })) {
        throw std::logic_error("decoder table incomplete for " + code.name);
    }
    for (const auto& r : table.entries) table.labels.push_back(logical_label(code, r.x_mask(), r.z_mask()));
    return table;
}

const PauliOperator& decode(const DecoderTable& table, const Syndrome& s) {
    if (s.bits >= table.entries.size()) throw std::invalid_argument("syndrome out of range for table");
    return table.entries[s.bits];
}

// Case families.

namespace {

struct Family {
    const char* id;
    const char* letters;  // roles i, j, m; '-' is no error
    const char* expect;   // S_i, S_j, S_m, R; '.' is unstated
    const char* partner_letters = nullptr;
    const char* partner_id = nullptr;
};

// Written for the code whose inner generators are Z-type.
const std::vector<Family>& families() {
    static const std::vector<Family> f = {
        {"I", "---", "++++"},
        {"II(1)", "X--", "-..+"},
        {"II(2)", "Z--", "+..-"},
        {"II(3)", "Y--", "-..-"},
        {"III(1)", "XX-", "--++"},
        {"III(2)", "XZ-", "-++-"},
        {"III(3)", "XY-", "--+-"},
        {"III(4)", "ZZ-", "+++-", "--Z", "II(2)"},
        {"III(5)", "ZY-", "+-+-", "-XZ", "III(2)"},
        {"III(6)", "YY-", "--+-"},
        {"IV(1)", "XXX", "---+"},
        {"IV(2)", "XXZ", "--+-", "YY-", "III(6)"},
        {"IV(3)", "XXY", "----"},
        {"IV(4)", "ZZZ", "++++", "---", "I"},
        {"IV(5)", "ZZX", "++--", "--Y", "II(3)"},
        {"IV(6)", "ZZY", "++-+", "--X", "II(1)"},
        {"IV(7)", "YYY", "---+", "XXX", "IV(1)"},
        {"IV(8)", "YYX", "----", "XXY", "IV(3)"},
        {"IV(9)", "YYZ", "--++", "XX-", "III(1)"},
    };
    return f;
}

PauliOperator place(const char* letters, const std::array<int, 3>& qubits, bool swap) {
    PauliOperator p(9);
    for (int r = 0; r < 3; ++r) {
        Letter l;
        switch (letters[r]) {
            case 'X': l = swap ? Letter::Z : Letter::X; break;
            case 'Z': l = swap ? Letter::X : Letter::Z; break;
            case 'Y': l = Letter::Y; break;
            default: continue;
        }
        p = p * PauliOperator::single(9, qubits[r], l);
    }
    return p.unsigned_part();
}

char pair_sign(std::pair<int, int> p) { return (p.first | p.second) ? '-' : '+'; }

}  // namespace

int CaseFamilyReport::failures() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

CaseFamilyReport verify_case_families(const CodeSpec& code) {
    bool swap;
    if (code.name == "EQ2") {
        swap = false;
    } else if (code.name == "EQ4") {
        swap = true;
    } else {
        throw std::invalid_argument("case families exist for EQ2 and EQ4 only");
    }
    CaseFamilyReport report;
    report.code = code.name;

    std::vector<std::array<int, 3>> placements;
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            for (int m = 0; m < 9; ++m) {
                int a = i / 3, b = j / 3, c = m / 3;
                if (a != b && b != c && a != c) placements.push_back({i, j, m});
            }
        }
    }

    struct Instance {
        std::string family;
        PauliOperator error;
    };
    std::vector<Instance> instances;
    std::set<std::string> seen;
    std::set<std::pair<std::string, std::string>> marked;

    for (const Family& fam : families()) {
        if (fam.partner_id) {
            marked.insert({fam.id, fam.partner_id});
            marked.insert({fam.partner_id, fam.id});
        }
        for (const auto& q : placements) {
            PauliOperator e = place(fam.letters, q, swap);
            std::string partner_str;
            PauliOperator partner(9);
            if (fam.partner_letters) {
                partner = place(fam.partner_letters, q, swap);
                partner_str = partner.str();
            }
            if (!seen.insert(std::string(fam.id) + e.str() + "/" + partner_str).second) continue;

            Syndrome s = extract_syndrome(code, e);
            FamilyCase c{fam.id, e.str(), s.str(), true, {}};
            std::string got;
            for (int r = 0; r < 3; ++r) got += pair_sign(s.inner_pair(CodeSpec::triple_of(q[r])));
            got += pair_sign(s.outer_pair());
            for (int k = 0; k < 4; ++k) {
                if (fam.expect[k] != '.' && fam.expect[k] != got[k]) c.pass = false;
            }
            if (!c.pass) c.detail = "expected " + std::string(fam.expect) + " got " + got;
            // Single Y: R pattern names the triple.
            if (std::string_view(fam.id) == "II(3)") {
                static constexpr std::pair<int, int> kR[3] = {{1, 0}, {1, 1}, {0, 1}};
                if (s.outer_pair() != kR[CodeSpec::triple_of(q[0])]) {
                    c.pass = false;
                    c.detail += " R pattern does not name triple";
                }
            }
            if (fam.partner_letters) {
                ++report.conflicts_checked;
                Syndrome ps = extract_syndrome(code, partner);
                if (ps != s) {
                    ++report.conflict_failures;
                    c.pass = false;
                    c.detail += " conflict partner " + partner_str + " has syndrome " + ps.str();
                }
            }
            auto& tally = report.per_family[fam.id];
            ++tally.first;
            if (!c.pass) ++tally.second;
            report.cases.push_back(std::move(c));
            instances.push_back({fam.id, e});
        }
    }

    // Equal syndromes across unmarked families must be the same logical class.
    std::map<std::uint32_t, std::vector<std::size_t>> by_syndrome;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        by_syndrome[extract_syndrome(code, instances[k].error).bits].push_back(k);
    }
    for (const auto& [s, group] : by_syndrome) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                const auto& ea = instances[group[a]];
                const auto& eb = instances[group[b]];
                if (logical_class(code, ea.error * eb.error) == LogicalClass::I) continue;
                if (marked.count({ea.family, eb.family})) continue;
                ++report.unmarked_collisions;
                if (report.unmarked_examples.size() < 20) {
                    report.unmarked_examples.push_back(ea.family + " " + ea.error.str() + " ~ " + eb.family + " " +
                                                       eb.error.str());
                }
            }
        }
    }
    return report;
}

std::string syndrome_table_csv(const CodeSpec& code, const DecoderTable& table) {
    const ErrorCensus& census = error_census(code);
    std::ostringstream out;
    out << "syndrome,recovery,weight,coset_I,coset_X,coset_Z,coset_Y\n";
    for (std::uint32_t s = 0; s < table.size(); ++s) {
        const auto& r = table.entries[s];
        Syndrome syn{s, static_cast<int>(code.generators.size())};
        out << syn.str() << ',' << r.str() << ',' << r.weight();
        for (int c = 0; c < 4; ++c) out << ',' << census.representative(s, table.labels[s] ^ c).str();
        out << '\n';
    }
    return out.str();
}

}  // namespace ninecode

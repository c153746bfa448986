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

#include "ninecode/oracle.h"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "ninecode/codes.h"
#include "ninecode/decoder.h"
#include "ninecode/reference.h"
#include "ninecode/statevec.h"

namespace ninecode {

std::vector<GoldenCheck> verify_codeword_goldens(const std::filesystem::path& data_dir) {
    std::vector<GoldenCheck> out;
    for (const auto& name : subgroup_fixture_names()) {
        SubgroupSpec spec = subgroup_fixture(name);
        auto golden = load_golden(data_dir / "codewords" / fixture_golden_file(name));
        for (const char* which : {"0_L", "1_L"}) {
            GoldenCheck c;
            c.fixture = name;
            c.codeword = which;
            const auto& want = golden[which];
            c.expected_terms = static_cast<int>(want.size());
            std::string seed(spec.num_qubits, which[0] == '0' ? '0' : '1');
            auto got = golden_terms(project_subgroup(spec, seed));
            std::map<std::string, GoldenTerm> by_bits;
            for (const auto& t : got) by_bits.emplace(t.bits, t);
            for (const auto& t : want) {
                auto it = by_bits.find(t.bits);
                if (it != by_bits.end() && it->second == t) {
                    ++c.matched_terms;
                } else if (c.detail.empty()) {
                    c.detail = "term " + format_golden_term(t) +
                               (it == by_bits.end() ? " missing" : " computed as " + format_golden_term(it->second));
                }
            }
            c.pass = c.matched_terms == c.expected_terms && got.size() == want.size();
            if (got.size() != want.size() && c.detail.empty()) {
                c.detail = "computed " + std::to_string(got.size()) + " terms";
            }
            out.push_back(c);
        }
    }
    return out;
}

OracleReport run_oracle_check(int samples, std::uint64_t seed, double tol) {
    static const std::array<const char*, 3> kCodes = {"EQ2", "EQ4", "SHOR"};
    std::map<std::string, DecoderTable> tables;
    for (const char* name : kCodes) tables.emplace(name, build_table(get_code(name), DecoderPolicy::MinWeight));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    OracleReport report;
    for (int k = 0; k < samples; ++k) {
        const CodeSpec& code = get_code(kCodes[rng() % kCodes.size()]);
        int weight = static_cast<int>(rng() % 4);
        std::vector<int> qubits(code.n);
        for (int q = 0; q < code.n; ++q) qubits[q] = q;
        std::shuffle(qubits.begin(), qubits.end(), rng);
        PauliOperator error(code.n);
        for (int w = 0; w < weight; ++w) {
            error = error * PauliOperator::single(code.n, qubits[w], static_cast<Letter>(1 + rng() % 3));
        }
        error = error.unsigned_part();
        Amplitude a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
        double nrm = std::sqrt(std::norm(a) + std::norm(b));
        a /= nrm;
        b /= nrm;

        ++report.samples;
        std::string tag = code.name + " " + error.str();
        StateVector encoded = encode(a, b, code.recipe);
        StateVector hit = apply_pauli(encoded, error);
        Syndrome frame = extract_syndrome(code, error);
        bool ok = true;
        for (std::size_t g = 0; g < code.generators.size(); ++g) {
            int expected = frame.bit(static_cast<int>(g)) ? -1 : 1;
            try {
                if (measure_stabilizer(hit, code.generators[g], tol).eigenvalue != expected) {
                    ok = false;
                    report.failures.push_back(tag + ": eigenvalue of " + code.generators[g].str());
                }
            } catch (const NotInSyndromeSector& e) {
                ok = false;
                report.failures.push_back(tag + ": " + e.what());
            }
        }
        const PauliOperator& recovery = decode(tables.at(code.name), frame);
        StateVector recovered = apply_pauli(hit, recovery);
        LogicalClass cls = logical_class(code, recovery * error);
        PauliOperator logical(code.n);
        if (cls == LogicalClass::X || cls == LogicalClass::Y) logical = logical * code.logical_x;
        if (cls == LogicalClass::Z || cls == LogicalClass::Y) logical = logical * code.logical_z;
        StateVector predicted = apply_pauli(encoded, logical);
        if (std::abs(fidelity(recovered, predicted) - 1.0) > tol) {
            ok = false;
            report.failures.push_back(tag + ": recovered state differs from frame prediction");
        }
        if (cls == LogicalClass::I && std::abs(fidelity(recovered, encoded) - 1.0) <= tol) ++report.restored;
        if (ok) ++report.agreements;
    }
    return report;
}

}  // namespace ninecode

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ninecode/codes.h"
#include "ninecode/reference.h"
#include "ninecode/statevec.h"

using namespace ninecode;

namespace {

PauliOperator P(const char* s, int n) { return PauliOperator::parse(s, n); }

const Amplitude kA{0.6, 0.0};
const Amplitude kB{0.0, 0.8};

StateVector bit_flip_state() { return encode(kA, kB, {ThreeQubitId::B1, std::nullopt}); }

bool same_up_to_phase(const StateVector& a, const StateVector& b) { return std::abs(fidelity(a, b) - 1) < 1e-12; }

}  // namespace

TEST_CASE("encode examples") {
    StateVector eq2 = encode(1, 0, get_code("EQ2").recipe);
    for (const char* bits : {"000000000", "111111000", "000111111", "111000111"}) {
        CHECK(std::abs(eq2.amplitude(bits) - 0.5) < 1e-12);
    }
    CHECK(std::abs(eq2.norm() - 1) < 1e-12);

    StateVector p2 = encode(1, 0, {ThreeQubitId::P2, std::nullopt});
    for (const char* bits : {"000", "011", "101", "110"}) CHECK(std::abs(p2.amplitude(bits) - 0.5) < 1e-12);

    StateVector b1 = encode(0, 1, {ThreeQubitId::B1, std::nullopt});
    CHECK(std::abs(b1.amplitude("111") - 1.0) < 1e-12);

    CHECK_THROWS_AS(encode(1, 1, {ThreeQubitId::B1, std::nullopt}), std::invalid_argument);
}

TEST_CASE("apply_pauli examples") {
    StateVector v = bit_flip_state();
    StateVector x1 = apply_pauli(v, P("X1", 3));
    CHECK(std::abs(x1.amplitude("100") - kA) < 1e-12);
    CHECK(std::abs(x1.amplitude("011") - kB) < 1e-12);

    StateVector y1 = apply_pauli(v, P("Y1", 3));
    const Amplitude i{0, 1};
    CHECK(std::abs(y1.amplitude("100") - i * kA) < 1e-12);
    CHECK(std::abs(y1.amplitude("011") + i * kB) < 1e-12);

    StateVector id = apply_pauli(v, PauliOperator(3));
    CHECK(std::abs(inner_product(id, v) - 1.0) < 1e-12);

    CHECK_THROWS_AS(apply_pauli(v, P("X1", 4)), std::invalid_argument);
}

TEST_CASE("double application is the identity with exact phase") {
    StateVector v = encode(1, 0, get_code("SHOR").recipe);
    for (const char* s : {"X1", "Y3Z7", "-iY2Z5", "+iX9"}) {
        PauliOperator p = P(s, 9);
        StateVector twice = apply_pauli(apply_pauli(v, p), p);
        PauliOperator sq = p * p;
        Amplitude expected = sq.phase() == 0 ? 1.0 : -1.0;
        CHECK(std::abs(inner_product(v, twice) - expected) < 1e-12);
    }
}

TEST_CASE("measure_stabilizer examples") {
    StateVector v = bit_flip_state();
    CHECK(measure_stabilizer(apply_pauli(v, P("X1", 3)), P("Z1Z2", 3)).eigenvalue == -1);
    CHECK(measure_stabilizer(v, P("Z1Z2", 3)).eigenvalue == 1);

    StateVector p2 = encode(kA, kB, {ThreeQubitId::P2, std::nullopt});
    CHECK(measure_stabilizer(apply_pauli(p2, P("Z1", 3)), P("X1X2", 3)).eigenvalue == -1);

    CHECK_THROWS_AS(measure_stabilizer(v, P("X1", 3)), NotInSyndromeSector);
}

TEST_CASE("project_subgroup examples and errors") {
    SubgroupSpec bit_flip{3, {P("Z1Z2", 3), P("Z2Z3", 3)}};
    StateVector v = project_subgroup(bit_flip, "000");
    CHECK(std::abs(v.amplitude("000") - 1.0) < 1e-12);

    SubgroupSpec steane = subgroup_fixture("STEANE");
    auto terms = golden_terms_in_group_order(steane, "0000000");
    REQUIRE(terms.size() == 8);
    CHECK(terms[0].bits == "0000000");

    auto five = golden_terms_in_group_order(subgroup_fixture("FIVE_QUBIT"), "00000");
    REQUIRE(five.size() == 16);
    std::string signs;
    for (const auto& t : five) signs += t.phase == 0 ? '+' : '-';
    CHECK(signs == "+++++----------+");
    CHECK(five[5].bits == "11011");

    SubgroupSpec clash{2, {P("X1", 2), P("Z1", 2)}};
    CHECK_THROWS_AS(project_subgroup(clash, "00"), std::invalid_argument);
    SubgroupSpec dependent{3, {P("Z1Z2", 3), P("Z2Z3", 3), P("Z1Z3", 3)}};
    CHECK_THROWS_AS(project_subgroup(dependent, "000"), std::invalid_argument);
    SubgroupSpec kills{1, {P("-Z1", 1)}};
    CHECK_THROWS_AS(project_subgroup(kills, "0"), SeedNotInCodeSpace);
    CHECK_THROWS_AS(project_subgroup(bit_flip, "010"), std::invalid_argument);
}

TEST_CASE("golden files match projections") {
    for (const auto& name : subgroup_fixture_names()) {
        SubgroupSpec s = subgroup_fixture(name);
        auto golden = load_golden(default_data_dir() / "codewords" / fixture_golden_file(name));
        for (const char* which : {"0_L", "1_L"}) {
            std::string seed(s.num_qubits, which[0]);
            auto got = golden_terms(project_subgroup(s, seed));
            auto want = golden[which];
            auto by_bits = [](std::vector<GoldenTerm> v) {
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.bits < b.bits; });
                return v;
            };
            CAPTURE(name);
            CAPTURE(which);
            CHECK(by_bits(got) == by_bits(want));
        }
    }
}

TEST_CASE("catalog codewords agree with subgroup projection") {
    for (const auto& name : catalog_names()) {
        const CodeSpec& code = get_code(name);
        auto [zero, one] = codewords(code);
        CAPTURE(name);
        SubgroupSpec plus = code.stabilizer();
        plus.generators.push_back(code.logical_z);
        SubgroupSpec minus = code.stabilizer();
        minus.generators.push_back(code.logical_z.with_phase(2));
        CHECK(same_up_to_phase(project_subgroup(plus, std::string(code.n, '0')), zero));
        CHECK(same_up_to_phase(project_subgroup(minus, std::string(code.n, '1')), one));
        CHECK(std::abs(inner_product(zero, one)) < 1e-12);
        for (const auto& g : code.generators) {
            CHECK(measure_stabilizer(zero, g).eigenvalue == 1);
            CHECK(measure_stabilizer(one, g).eigenvalue == 1);
        }
        for (const auto& t : golden_terms(zero)) CHECK(t.phase % 2 == 0);
    }
}

TEST_CASE("golden term text") {
    GoldenTerm t = parse_golden_term("-|11011⟩ 4");
    CHECK(t.bits == "11011");
    CHECK(t.phase == 2);
    CHECK(t.exponent == 4);
    CHECK(format_golden_term(t) == "-|11011⟩ 4");
    CHECK(parse_golden_term("+i|01> 1").phase == 1);
    CHECK_THROWS_AS(parse_golden_term("|01> 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_golden_term("+|01>"), std::invalid_argument);
}

TEST_CASE("gates") {
    StateVector v(2);
    v.apply_h(0);
    v.apply_cnot(0, 1);
    CHECK(std::abs(v.amplitude("00") - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(v.amplitude("11") - std::sqrt(0.5)) < 1e-12);
    CHECK_THROWS_AS(v.apply_cnot(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(v.apply_h(2), std::invalid_argument);
}

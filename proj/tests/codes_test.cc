#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ninecode/codes.h"
#include "ninecode/decoder.h"

using namespace ninecode;

namespace {

PauliOperator P(const char* s, int n = 9) { return PauliOperator::parse(s, n); }

std::vector<std::string> strs(const std::vector<PauliOperator>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str());
    return out;
}

std::set<std::string> as_set(const std::vector<PauliOperator>& ps) {
    auto v = strs(ps);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("generator sets") {
    CHECK(strs(get_code("B1").generators) == std::vector<std::string>{"+Z1Z2", "+Z2Z3"});
    CHECK(strs(get_code("P2").generators) == std::vector<std::string>{"+X1X2", "+X2X3"});
    std::vector<std::string> shor = {"+Z1Z2", "+Z2Z3", "+Z4Z5", "+Z5Z6", "+Z7Z8", "+Z8Z9", "+X1X2X3X4X5X6",
                                     "+X4X5X6X7X8X9"};
    CHECK(strs(get_code("EQ2").generators) == shor);
    CHECK(strs(get_code("SHOR").generators) == shor);
    std::vector<std::string> eq4 = {"+X1X2", "+X2X3", "+X4X5", "+X5X6", "+X7X8", "+X8X9", "+Z1Z2Z3Z4Z5Z6",
                                    "+Z4Z5Z6Z7Z8Z9"};
    CHECK(strs(get_code("EQ4").generators) == eq4);
}

TEST_CASE("canonical logical representatives") {
    const CodeSpec& eq2 = get_code("EQ2");
    CHECK(eq2.logical_x.str() == "+X1X2X3");
    CHECK(eq2.logical_z.str() == "+Z1Z2Z3Z4Z5Z6Z7Z8Z9");
    CHECK(as_set(eq2.alt_logical_x) == std::set<std::string>{"+X4X5X6", "+X7X8X9", "+X1X2X3X4X5X6X7X8X9"});
    CHECK(as_set(eq2.alt_logical_z).count("+Z1Z4Z7"));
    CHECK(as_set(eq2.alt_logical_z).count("+Z3Z5Z8"));
    CHECK(logical_class(eq2, P("Z1Z4Z7") * eq2.logical_z) == LogicalClass::I);

    const CodeSpec& eq4 = get_code("EQ4");
    CHECK(eq4.logical_x.str() == "+X1X2X3X4X5X6X7X8X9");
    CHECK(eq4.logical_z.str() == "+Z1Z2Z3");
    CHECK(as_set(eq4.alt_logical_z).count("+Z7Z8Z9"));
    CHECK(as_set(eq4.alt_logical_x).count("+X2X6X9"));

    const CodeSpec& shor = get_code("SHOR");
    CHECK(shor.logical_x.str() == "+Z1Z2Z3Z4Z5Z6Z7Z8Z9");
    CHECK(shor.logical_z.str() == "+X1X2X3");
}

TEST_CASE("every alternate representative has the canonical class") {
    for (const auto& name : catalog_names()) {
        const CodeSpec& c = get_code(name);
        CAPTURE(name);
        CHECK_NOTHROW(c.validate());
        for (const auto& p : c.alt_logical_x) CHECK(logical_class(c, p) == LogicalClass::X);
        for (const auto& p : c.alt_logical_z) CHECK(logical_class(c, p) == LogicalClass::Z);
        CHECK(static_cast<int>(c.generators.size()) == c.n - 1);
    }
    CHECK(get_code("EQ2").alt_logical_z.size() == 63);
}

TEST_CASE("EQ2 and SHOR swap logical roles") {
    const CodeSpec& eq2 = get_code("EQ2");
    const CodeSpec& shor = get_code("SHOR");
    CHECK(as_set(eq2.generators) == as_set(shor.generators));
    CHECK(logical_class(shor, eq2.logical_x) == LogicalClass::Z);
    CHECK(logical_class(shor, eq2.logical_z) == LogicalClass::X);
    CHECK(logical_class(eq2, shor.logical_x) == LogicalClass::Z);
}

TEST_CASE("EQ4 is the transversal-H image of EQ2") {
    CodeSpec h = conjugate_transversal_h(get_code("EQ2"));
    const CodeSpec& eq4 = get_code("EQ4");
    CHECK(strs(h.generators) == strs(eq4.generators));
    CHECK(h.logical_x == eq4.logical_x);
    CHECK(h.logical_z == eq4.logical_z);
}

TEST_CASE("build_nine_qubit maps onto the named codes") {
    using T = ThreeQubitId;
    CHECK(build_nine_qubit(T::P2, T::B1).name == "EQ2");
    CHECK(build_nine_qubit(T::B1, T::P2).name == "EQ4");
    CHECK(build_nine_qubit(T::P1, T::B1).name == "SHOR");
    CHECK(&get_code("P2B1") == &get_code("EQ2"));

    auto [zero, one] = codewords(build_nine_qubit(T::P1, T::B2));
    CHECK(std::abs(zero.amplitude("000000000") - 1.0) < 1e-12);
    CHECK(std::abs(one.amplitude("111111111") - 1.0) < 1e-12);

    // 1/8 on each of 64 terms.
    auto eq4 = golden_terms(codewords(get_code("EQ4")).first);
    CHECK(eq4.size() == 64);
    CHECK(std::all_of(eq4.begin(), eq4.end(), [](const auto& t) { return t.exponent == 6 && t.phase == 0; }));

    // 1/(16 sqrt 2) on each of 512 terms.
    auto pm = golden_terms(codewords(get_code("B1P1")).second);
    CHECK(pm.size() == 512);
    CHECK(pm.front().exponent == 9);

    auto shor = golden_terms(codewords(get_code("SHOR")).first);
    CHECK(shor.size() == 8);
    CHECK(shor.front().exponent == 3);
}

TEST_CASE("effectiveness classification") {
    std::map<std::string, Effectiveness> want = {
        {"B1", Effectiveness::BitFlipOnly},
        {"B2", Effectiveness::BitFlipOnly},
        {"P1", Effectiveness::PhaseFlipOnly},
        {"P2", Effectiveness::PhaseFlipOnly},
        {"EQ2", Effectiveness::CorrectsAllSingleQubit},
        {"EQ4", Effectiveness::CorrectsAllSingleQubit},
        {"SHOR", Effectiveness::CorrectsAllSingleQubit},
        {"B2P2", Effectiveness::CorrectsAllSingleQubit},
        {"B1P1", Effectiveness::PhaseFlipOnly},
        {"B2P1", Effectiveness::PhaseFlipOnly},
        {"P1B2", Effectiveness::BitFlipOnly},
        {"P2B2", Effectiveness::BitFlipOnly},
    };
    CHECK(catalog_names().size() == 12);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        CHECK(classify_effectiveness(get_code(name)) == want.at(name));
    }
}

TEST_CASE("registered transforms pass the codeword check") {
    for (const auto& t : registered_transforms()) {
        CAPTURE(t.source);
        CAPTURE(t.target);
        CHECK(apply_transform(t).name == t.target);
    }
    CHECK_THROWS_AS(apply_transform({TransformKind::LogicalH, "B1", "P1"}), std::invalid_argument);
}

TEST_CASE("transform oracle rejects a wrong target") {
    auto [zero, one] = transform_codewords(TransformKind::TransversalH, get_code("B1"));
    auto [p1_zero, p1_one] = codewords(get_code("P1"));
    CHECK(std::abs(fidelity(zero, p1_zero) - 1) < 1e-12);
    auto [b2_zero, b2_one] = codewords(get_code("B2"));
    CHECK(fidelity(zero, b2_zero) < 0.99);
}

TEST_CASE("lookup errors and JSON export") {
    CHECK_THROWS_AS(get_code("EQ3"), std::invalid_argument);
    auto j = nlohmann::json::parse(code_to_json(get_code("EQ4")));
    CHECK(j["name"] == "EQ4");
    CHECK(j["n"] == 9);
    CHECK(j["generators"].size() == 8);
    CHECK(j["recipe"]["outer"] == "B1");
    CHECK(j["recipe"]["inner"] == "P2");
    CHECK(j["effectiveness"] == "corrects_all_single_qubit");
}

TEST_CASE("stabilizer membership") {
    const CodeSpec& eq2 = get_code("EQ2");
    CHECK(in_stabilizer_group(eq2, P("Z1Z3")));
    CHECK(in_stabilizer_group(eq2, P("X1X2X3X7X8X9")));
    CHECK_FALSE(in_stabilizer_group(eq2, P("X1X2X3")));
}

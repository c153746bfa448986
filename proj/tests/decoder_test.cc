#include <doctest.h>

#include <map>
#include <stdexcept>

#include "ninecode/decoder.h"

using namespace ninecode;

namespace {

PauliOperator P(const char* s, int n = 9) { return PauliOperator::parse(s, n); }

std::pair<int, int> pm(int a, int b) { return {a < 0, b < 0}; }

}  // namespace

TEST_CASE("extract_syndrome examples") {
    const CodeSpec& eq2 = get_code("EQ2");
    Syndrome x1 = extract_syndrome(eq2, P("X1"));
    CHECK(x1.inner_pair(0) == pm(-1, 1));
    CHECK(x1.inner_pair(1) == pm(1, 1));
    CHECK(x1.inner_pair(2) == pm(1, 1));
    CHECK(x1.outer_pair() == pm(1, 1));
    CHECK(x1.str() == "10000000");

    Syndrome y1 = extract_syndrome(eq2, P("Y1"));
    CHECK(y1.inner_pair(0) == pm(-1, 1));
    CHECK(y1.outer_pair() == pm(-1, 1));

    CHECK(extract_syndrome(eq2, PauliOperator(9)).bits == 0);
    CHECK(extract_syndrome(get_code("B1"), P("X1", 3)).str() == "10");
    CHECK_THROWS_AS(extract_syndrome(eq2, P("X1", 3)), std::invalid_argument);
}

TEST_CASE("logical_class examples") {
    const CodeSpec& eq2 = get_code("EQ2");
    CHECK(logical_class(eq2, P("Z1Z2")) == LogicalClass::I);
    CHECK(logical_class(eq2, P("Z1Z2Z3Z4Z5Z6Z7Z8Z9")) == LogicalClass::Z);
    CHECK(logical_class(get_code("SHOR"), P("Z1Z2Z3Z4Z5Z6Z7Z8Z9")) == LogicalClass::X);
    CHECK(logical_class(eq2, P("X1X2X3") * P("Z1Z4Z7")) == LogicalClass::Y);
    CHECK_THROWS_AS(logical_class(eq2, P("X1")), std::logic_error);
}

TEST_CASE("min-weight table for EQ2") {
    const CodeSpec& eq2 = get_code("EQ2");
    DecoderTable t = build_table(eq2, DecoderPolicy::MinWeight);
    REQUIRE(t.size() == 256);
    CHECK(t.entries[0].is_identity());
    CHECK(decode(t, extract_syndrome(eq2, P("X1"))) == P("X1"));
    CHECK(decode(t, extract_syndrome(eq2, P("Y1"))) == P("Y1"));
    CHECK(decode(t, extract_syndrome(eq2, P("Z2"))) == P("Z1"));
    CHECK(decode(t, extract_syndrome(eq2, P("Z3"))).str() == "+Z1");

    // Frozen from an exhaustive enumeration written independently of the library.
    std::map<int, int> histogram;
    for (const auto& r : t.entries) ++histogram[r.weight()];
    CHECK(histogram == std::map<int, int>{{0, 1}, {1, 21}, {2, 126}, {3, 108}});

    for (std::uint32_t s = 0; s < t.size(); ++s) CHECK(extract_syndrome(eq2, t.entries[s]).bits == s);
}

TEST_CASE("EQ4 table recovers bit flips within a triple by the first qubit") {
    const CodeSpec& eq4 = get_code("EQ4");
    DecoderTable t = build_table(eq4, DecoderPolicy::MinWeight);
    for (const char* e : {"X1", "X2", "X3"}) CHECK(decode(t, extract_syndrome(eq4, P(e))) == P("X1"));
    CHECK(decode(t, extract_syndrome(eq4, P("Z1"))) == P("Z1"));
    CHECK(logical_class(eq4, P("X1") * P("X3")) == LogicalClass::I);
}

TEST_CASE("three-qubit tables have four rows") {
    DecoderTable t = build_table(get_code("B1"), DecoderPolicy::MinWeight);
    REQUIRE(t.size() == 4);
    CHECK(t.entries[1] == P("X1", 3));
    CHECK(t.entries[3] == P("X2", 3));
    CHECK(t.entries[2] == P("X3", 3));
}

TEST_CASE("single-qubit errors decode to the identity class") {
    for (const char* name : {"EQ2", "EQ4", "SHOR"}) {
        const CodeSpec& code = get_code(name);
        for (auto policy : {DecoderPolicy::MinWeight, DecoderPolicy::MinWeightXZFirst}) {
            DecoderTable t = build_table(code, policy);
            int failures = 0;
            for_each_pauli(9, 1, [&](const PauliOperator& e) {
                if (logical_class(code, decode(t, extract_syndrome(code, e)) * e) != LogicalClass::I) ++failures;
            });
            CAPTURE(name);
            CHECK(failures == 0);
        }
    }
}

TEST_CASE("degenerate phase flips share one class") {
    const CodeSpec& eq2 = get_code("EQ2");
    for (int t = 0; t < 3; ++t)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                PauliOperator za = PauliOperator::single(9, 3 * t + a, Letter::Z);
                PauliOperator zb = PauliOperator::single(9, 3 * t + b, Letter::Z);
                CHECK(logical_class(eq2, za * zb) == LogicalClass::I);
            }
}

TEST_CASE("Y-free preference changes only equal-weight ties") {
    const CodeSpec& eq2 = get_code("EQ2");
    DecoderTable mw = build_table(eq2, DecoderPolicy::MinWeight);
    DecoderTable xz = build_table(eq2, DecoderPolicy::MinWeightXZFirst);
    int changed = 0, with_y = 0;
    for (std::size_t s = 0; s < mw.size(); ++s) {
        CHECK(mw.entries[s].weight() == xz.entries[s].weight());
        if (mw.entries[s] != xz.entries[s]) {
            ++changed;
            CHECK(mw.entries[s].has_y());
            CHECK_FALSE(xz.entries[s].has_y());
        }
        with_y += xz.entries[s].has_y();
    }
    CHECK(changed == 9);
    CHECK(with_y == 171);
}

TEST_CASE("max-likelihood table") {
    const CodeSpec& shor = get_code("SHOR");
    CHECK_THROWS_AS(build_table(shor, DecoderPolicy::MaxLikelihood), std::invalid_argument);
    PauliChannel lam{0.92, 0.08 / 3, 0.08 / 3, 0.08 / 3};
    DecoderTable ml = build_table(shor, DecoderPolicy::MaxLikelihood, lam);
    REQUIRE(ml.size() == 256);
    CHECK(ml.entries[0].is_identity());
    for (std::uint32_t s = 0; s < ml.size(); ++s) CHECK(extract_syndrome(shor, ml.entries[s]).bits == s);

    // Brute-force coset probabilities decide every entry.
    const ErrorCensus& census = error_census(shor);
    auto w = census.cell_weights(lam);
    for (std::uint32_t s = 0; s < ml.size(); ++s) {
        int chosen = ml.labels[s];
        for (int c = 0; c < 4; ++c) CHECK(w[s * 4 + chosen] >= w[s * 4 + c] * (1 - 1e-12));
    }
}

TEST_CASE("policy names") {
    CHECK(parse_policy("minweight") == DecoderPolicy::MinWeight);
    CHECK(parse_policy("ml") == DecoderPolicy::MaxLikelihood);
    CHECK(parse_policy("minweight-xz") == DecoderPolicy::MinWeightXZFirst);
    CHECK(policy_name(DecoderPolicy::MaxLikelihood) == "max_likelihood");
    CHECK_THROWS_AS(parse_policy("best"), std::invalid_argument);
}

TEST_CASE("case families reproduce sign patterns and conflicts") {
    for (const char* name : {"EQ2", "EQ4"}) {
        CaseFamilyReport r = verify_case_families(get_code(name));
        CAPTURE(name);
        CHECK(r.ok());
        CHECK(r.per_family.size() == 19);
        CHECK(r.per_family.at("III(5)").first == 162);
        CHECK(r.conflicts_checked == 702);
        CHECK(r.unmarked_collisions == 0);
    }
    CHECK_THROWS_AS(verify_case_families(get_code("SHOR")), std::invalid_argument);
}

TEST_CASE("case III(4) conflicts with a single phase flip") {
    const CodeSpec& eq2 = get_code("EQ2");
    CHECK(extract_syndrome(eq2, P("Z1Z4")) == extract_syndrome(eq2, P("Z7")));
    CHECK(extract_syndrome(eq2, P("Z1Z4Z7")).bits == 0);
}

TEST_CASE("syndrome table CSV") {
    const CodeSpec& eq2 = get_code("EQ2");
    std::string csv = syndrome_table_csv(eq2, build_table(eq2, DecoderPolicy::MinWeight));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
    CHECK(csv.find("syndrome,recovery,weight,coset_I,coset_X,coset_Z,coset_Y\n00000000,+I,0,+I,") == 0);
    CHECK(csv.find("\n10000010,+Y1,1,") != std::string::npos);
}

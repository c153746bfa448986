#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

#include "ninecode/pauli.h"

using namespace ninecode;

namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;

// Dense oracle: 2x2 matrices of the Hermitian letters.
M2 matrix(Letter l) {
    switch (l) {
        case Letter::I: return {1, 0, 0, 1};
        case Letter::X: return {0, 1, 1, 0};
        case Letter::Z: return {1, 0, 0, -1};
        case Letter::Y: return {0, C(0, -1), C(0, 1), 0};
    }
    return {};
}

std::vector<C> dense(const PauliOperator& p) {
    std::vector<C> m{1};
    int dim = 1;
    for (int q = 0; q < p.num_qubits(); ++q) {
        M2 s = matrix(p.letter(q));
        std::vector<C> out(4 * dim * dim);
        int nd = 2 * dim;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) out[(2 * r + a) * nd + (2 * c + b)] = m[r * dim + c] * s[a * 2 + b];
        m = std::move(out);
        dim = nd;
    }
    const C ipow[4] = {1, C(0, 1), -1, C(0, -1)};
    for (auto& v : m) v *= ipow[p.phase()];
    return m;
}

std::vector<C> matmul(const std::vector<C>& a, const std::vector<C>& b) {
    int dim = static_cast<int>(std::lround(std::sqrt(a.size())));
    std::vector<C> out(a.size());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            for (int k = 0; k < dim; ++k) out[r * dim + c] += a[r * dim + k] * b[k * dim + c];
    return out;
}

bool near(const std::vector<C>& a, const std::vector<C>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-12) return false;
    }
    return true;
}

PauliOperator P(const char* s, int n) { return PauliOperator::parse(s, n); }

}  // namespace

TEST_CASE("multiply matches dense matrices on one and two qubits") {
    for (int n : {1, 2}) {
        auto all = enumerate_paulis(n, n);
        for (const auto& p0 : all) {
            for (const auto& q0 : all) {
                for (int kp = 0; kp < 4; ++kp) {
                    PauliOperator p = p0.with_phase(kp);
                    PauliOperator q = q0.with_phase(3 * kp + 1);
                    CHECK(near(dense(p * q), matmul(dense(p), dense(q))));
                }
            }
        }
    }
}

TEST_CASE("multiply examples") {
    PauliOperator xz = P("X1", 1) * P("Z1", 1);
    CHECK(xz.x_mask() == 1);
    CHECK(xz.z_mask() == 1);
    CHECK(xz.phase() == 3);
    CHECK(xz.str() == "-iY1");

    PauliOperator p = P("-iY2Z5", 9);
    CHECK(PauliOperator(9) * p == p);
    CHECK(P("X1X2", 3) * P("X2X3", 3) == P("+X1X3", 3));
    CHECK_THROWS_AS(P("X1", 2) * P("X1", 3), std::invalid_argument);
}

TEST_CASE("commutes examples") {
    CHECK_FALSE(commutes(P("X1", 1), P("Z1", 1)));
    CHECK_FALSE(commutes(P("X1", 3), P("Z1Z2", 3)));
    CHECK(commutes(P("X1", 3), P("Z2Z3", 3)));
    std::vector<PauliOperator> five = {P("X1Z2Z3X4", 5), P("X2Z3Z4X5", 5), P("X1X3Z4Z5", 5), P("Z1X2X4Z5", 5)};
    for (const auto& a : five)
        for (const auto& b : five) CHECK(commutes(a, b));
    CHECK_THROWS_AS(commutes(P("X1", 2), P("X1", 3)), std::invalid_argument);
}

TEST_CASE("weight") {
    CHECK(PauliOperator(9).weight() == 0);
    CHECK(P("Y1Z3", 9).weight() == 2);
    CHECK(P("X1X2X3X4X5X6", 9).weight() == 6);
}

TEST_CASE("text form round trips") {
    for (const char* s : {"+X1X2X3", "-iY2Z5", "+iZ9", "-I", "+X10Y16"}) {
        CHECK(P(s, 16).str() == s);
    }
    CHECK(P("X1", 3).str() == "+X1");
    CHECK(P("iI", 2).str() == "+iI");
    CHECK_THROWS_AS(P("i", 2), std::invalid_argument);
    CHECK(P("Y1", 1).x_mask() == 1);
    CHECK(P("Y1", 1).z_mask() == 1);
    CHECK(P("Y1", 1).phase() == 0);
    for (const char* bad : {"", "+", "X", "X0", "X4", "X1X1", "W1", "X1 ", "X123"}) {
        CHECK_THROWS_AS(P(bad, 3), std::invalid_argument);
    }
}

TEST_CASE("enumeration order and counts") {
    auto one = enumerate_paulis(1, 1);
    REQUIRE(one.size() == 4);
    CHECK(one[0].str() == "+I");
    CHECK(one[1].str() == "+X1");
    CHECK(one[2].str() == "+Z1");
    CHECK(one[3].str() == "+Y1");

    auto three = enumerate_paulis(3, 3);
    CHECK(three.size() == 64);
    std::set<std::pair<std::uint32_t, std::uint32_t>> masks;
    for (const auto& p : three) masks.insert({p.x_mask(), p.z_mask()});
    CHECK(masks.size() == 64);

    auto two = enumerate_paulis(2, 2);
    std::vector<std::string> want = {"+I",    "+X1",   "+Z1",   "+Y1",   "+X2",   "+Z2",   "+Y2",   "+X1X2",
                                     "+X1Z2", "+X1Y2", "+Z1X2", "+Z1Z2", "+Z1Y2", "+Y1X2", "+Y1Z2", "+Y1Y2"};
    REQUIRE(two.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(two[k].str() == want[k]);

    CHECK(enumerate_paulis(9, 1).size() == 28);
    std::size_t count = 0;
    int last_weight = 0;
    bool sorted = true;
    for_each_pauli(9, 9, [&](const PauliOperator& p) {
        ++count;
        sorted = sorted && p.weight() >= last_weight;
        last_weight = p.weight();
    });
    CHECK(count == 262144);
    CHECK(sorted);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(PauliOperator(17), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator(3, 0b1000, 0), std::invalid_argument);
    CHECK(PauliOperator(3, 1, 0, 6).phase() == 2);
    CHECK(PauliOperator::single(9, 4, Letter::Y).str() == "+Y5");
}

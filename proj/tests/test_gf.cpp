#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coset_atlas/gf.hpp"

#include <set>
#include <vector>

using namespace coset_atlas;
using gf::Fe;
using gf::Field;

namespace {

// Independent irreducibility oracle: a cubic over GF(p) is reducible iff it
// has a root; degree-4 additionally needs a quadratic-factor scan. Kept apart
// from the library's trial-division check on purpose.
bool cubic_irreducible_oracle(int p, const std::vector<int>& f) {
    for (int r = 0; r < p; ++r) {
        int value = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            value = (value * r + f[static_cast<std::size_t>(i)]) % p;
        if (value == 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("prime field construction") {
    Field f = Field::build(5, 1);
    CHECK(f.order() == 5);
    CHECK(f.characteristic() == 5);
    CHECK(f.modulus() == std::vector<int>{0, 1});
    auto elems = f.all_elements();
    REQUIRE(elems.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(elems[static_cast<std::size_t>(i)].index() == i);
}

TEST_CASE("GF(8) accepts x^3+x+1 and rejects x^3+1") {
    CHECK(cubic_irreducible_oracle(2, {1, 1, 0, 1}));
    CHECK_FALSE(cubic_irreducible_oracle(2, {1, 0, 0, 1})); // (x+1)(x^2+x+1)

    Field f = Field::build(2, 3, {1, 1, 0, 1});
    CHECK(f.order() == 8);

    CHECK_THROWS_WITH_AS(Field::build(2, 3, {1, 0, 0, 1}), doctest::Contains("ReducibleModulus"),
                         AtlasError);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::build(6, 1), AtlasError);  // NonPrimeCharacteristic
    CHECK_THROWS_AS(Field::build(2, 2), AtlasError);  // q = 4 unsupported
    CHECK_THROWS_AS(Field::build(3, 1), AtlasError);  // q = 3 unsupported
    CHECK_THROWS_AS(Field::build(2, 8), AtlasError);  // q = 256 beyond cap
    try {
        Field::build(7, 1, {0, 2});
        FAIL("non-monic modulus accepted");
    } catch (const AtlasError& e) {
        CHECK(e.code() == Errc::ReducibleModulus);
    }
}

TEST_CASE("arithmetic examples") {
    Field f5 = Field::build(5, 1);
    CHECK(f5.element(3) * f5.element(4) == f5.element(2)); // 12 mod 5
    CHECK(f5.element(2).inverse() == f5.element(3));       // 2*3 = 6 = 1

    Field f8 = Field::build(2, 3, {1, 1, 0, 1});
    Fe x = f8.from_coeffs({0, 1, 0});
    Fe x2 = f8.from_coeffs({0, 0, 1});
    Fe xp1 = f8.from_coeffs({1, 1, 0});
    CHECK(x * x2 == xp1); // x^3 = x + 1
}

TEST_CASE("element order is lexicographic on coefficients, zero first") {
    Field f9 = Field::build(3, 2);
    auto elems = f9.all_elements();
    REQUIRE(elems.size() == 9);
    CHECK(elems[0].is_zero());
    CHECK(f9.coeffs(elems[1]) == std::vector<int>{0, 1});
    CHECK(f9.coeffs(elems[3]) == std::vector<int>{1, 0});
    CHECK(f9.one().index() == 3);

    std::set<std::vector<int>> seen;
    for (Fe e : elems) seen.insert(f9.coeffs(e));
    CHECK(seen.size() == 9);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (int q : {5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        Field f = gf::field_of_order(q);
        auto elems = f.all_elements();
        for (Fe a : elems)
            for (Fe b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (Fe c : elems) {
                    REQUIRE((a + b) + c == a + (b + c));
                    REQUIRE(a * (b + c) == a * b + a * c);
                }
            }
        for (Fe a : elems) {
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == f.one());
            CHECK(a.pow(q - 1) == f.one());
        }
    }
}

TEST_CASE("mixed fields and zero division are rejected") {
    Field f5 = Field::build(5, 1);
    Field f7 = Field::build(7, 1);
    CHECK_THROWS_AS((void)(f5.element(1) + f7.element(1)), AtlasError);
    try {
        (void)f5.zero().inverse();
        FAIL("inverse of zero accepted");
    } catch (const AtlasError& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("solve_linear on the identity and an inconsistent system") {
    Field f = Field::build(5, 1);
    gf::Matrix eye(4, 4, f.zero());
    for (std::size_t i = 0; i < 4; ++i) eye(i, i) = f.one();
    std::vector<Fe> b{f.element(2), f.element(0), f.element(4), f.element(1)};
    auto sol = gf::solve_linear(eye, b);
    CHECK(sol.particular == b);
    CHECK(sol.solution_dim == 0);

    gf::Matrix rows(2, 2, f.zero());
    rows(0, 0) = f.one();
    rows(1, 0) = f.one();
    std::vector<Fe> rhs{f.element(1), f.element(2)};
    CHECK_THROWS_AS(gf::solve_linear(rows, rhs), AtlasError);
}

TEST_CASE("null space dimensions") {
    Field f = Field::build(5, 1);
    gf::Matrix zero13(1, 3, f.zero());
    CHECK(gf::null_space(zero13).size() == 3);

    // Parity-check shape: columns (1, t, t^2, t^3) for all t plus (0,0,0,1).
    gf::Matrix h(4, 6, f.zero());
    for (int t = 0; t < 5; ++t) {
        Fe e = f.element(t);
        h(0, static_cast<std::size_t>(t)) = f.one();
        h(1, static_cast<std::size_t>(t)) = e;
        h(2, static_cast<std::size_t>(t)) = e * e;
        h(3, static_cast<std::size_t>(t)) = e * e * e;
    }
    h(3, 5) = f.one();
    CHECK(gf::rank(h) == 4);
    auto basis = gf::null_space(h);
    CHECK(basis.size() == 2); // k = q - 3
    for (const auto& v : basis) {
        auto hv = gf::mat_vec(h, v);
        for (const Fe& e : hv) CHECK(e.is_zero());
    }
}

TEST_CASE("field spec parsing") {
    Field f8 = gf::parse_field_spec("2^3:1,1,0,1");
    CHECK(f8.order() == 8);
    Field f7 = gf::parse_field_spec("7");
    CHECK(f7.order() == 7);
    CHECK_THROWS_AS(gf::parse_field_spec("2^3:1,0,0,1"), AtlasError);

    CHECK(gf::factor_prime_power(121) == std::pair<int, int>{11, 2});
    CHECK_THROWS_AS(gf::factor_prime_power(12), AtlasError);
}

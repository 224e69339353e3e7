#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coset_atlas/code.hpp"

#include <map>

using namespace coset_atlas;
using code::Code;
using code::CodeParameters;
using code::CosetClass;
using code::WeightDistribution;
using cubic::GeometryContext;
using cubic::PointOrbitLabel;
using gf::Fe;

namespace {

const GeometryContext& geo_for(int q) {
    static std::map<int, GeometryContext> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, GeometryContext::for_order(q)).first;
    return it->second;
}

const Code& code_for(int q) {
    static std::map<int, Code> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Code(geo_for(q))).first;
    return it->second;
}

WeightDistribution dist_of(std::initializer_list<long> values) {
    WeightDistribution out;
    for (long v : values) out.push_back(Int(v));
    return out;
}

} // namespace

TEST_CASE("parity-check matrix layout") {
    const Code& c = code_for(5);
    const auto& h = c.parity_check();
    const auto& f = c.geometry().field();
    REQUIRE(h.rows() == 4);
    REQUIRE(h.cols() == 6);
    CHECK(h(0, 2) == f.one());
    CHECK(h(1, 2) == f.element(2));
    CHECK(h(2, 2) == f.element(4));
    CHECK(h(3, 2) == f.element(3));
    // last column is the point at infinity
    CHECK(h(0, 5).is_zero());
    CHECK(h(1, 5).is_zero());
    CHECK(h(2, 5).is_zero());
    CHECK(h(3, 5) == f.one());

    CHECK(gf::rank(code_for(7).parity_check()) == 4);
}

TEST_CASE("syndrome computation") {
    const Code& c = code_for(5);
    const auto& f = c.geometry().field();
    std::vector<Fe> zero(6, f.zero());
    for (const Fe& e : c.syndrome(zero)) CHECK(e.is_zero());

    std::vector<Fe> e3(6, f.zero());
    e3[3] = f.one();
    auto s = c.syndrome(e3);
    for (std::size_t r = 0; r < 4; ++r) CHECK(s[r] == c.parity_check()(r, 3));

    // e_0 + e_1 has syndrome P(0) + P(1) = (2, 1, 1, 1)
    std::vector<Fe> x(6, f.zero());
    x[0] = f.one();
    x[1] = f.one();
    auto s2 = c.syndrome(x);
    CHECK(s2[0] == f.element(2));
    CHECK(s2[1] == f.one());
    CHECK(s2[2] == f.one());
    CHECK(s2[3] == f.one());

    std::vector<Fe> bad(5, f.zero());
    CHECK_THROWS_AS(c.syndrome(bad), AtlasError);
}

TEST_CASE("syndrome classification") {
    SUBCASE("scaled parity-check columns are weight-1 cosets") {
        const Code& c = code_for(5);
        const auto& f = c.geometry().field();
        std::array<Fe, 4> s;
        for (std::size_t r = 0; r < 4; ++r) s[r] = f.element(3) * c.parity_check()(r, 1);
        auto got = c.classify_syndrome(s);
        CHECK(got.cls == CosetClass::W1);
        CHECK(got.leader_weight == 1);
    }
    SUBCASE("zero syndrome is the code") {
        const Code& c = code_for(5);
        const auto& f = c.geometry().field();
        auto got = c.classify_syndrome({f.zero(), f.zero(), f.zero(), f.zero()});
        CHECK(got.cls == CosetClass::Code);
        CHECK(got.leader_weight == 0);
    }
    SUBCASE("q = 7: a chord point splits by its osculating count") {
        const Code& c = code_for(7);
        const auto& geo = c.geometry();
        const auto& f = geo.field();
        std::array<Fe, 4> s;
        for (std::size_t r = 0; r < 4; ++r)
            s[r] = c.parity_check()(r, 0) + c.parity_check()(r, 1);
        auto got = c.classify_syndrome(s);
        CHECK(got.leader_weight == 2);
        int mu = geo.osculating_count(geom::make_point(s));
        if (got.cls == CosetClass::W2a) CHECK(mu == 0);
        else {
            CHECK(got.cls == CosetClass::W2b);
            CHECK(mu == 3);
        }
    }
    SUBCASE("q = 9: axis points give weight-3 cosets of the combined class") {
        const Code& c = code_for(9);
        const auto& geo = c.geometry();
        auto axis_point = geo.pencil_axis()->points().front();
        auto got = c.classify_syndrome(axis_point.x);
        CHECK(got.cls == CosetClass::W3b);
        CHECK(got.leader_weight == 3);
    }
    SUBCASE("classification is constant under scalar multiples (q <= 9)") {
        for (int q : {5, 7, 8, 9}) {
            CAPTURE(q);
            const Code& c = code_for(q);
            const auto& f = c.geometry().field();
            std::size_t space = 1;
            for (int i = 0; i < 4; ++i) space *= static_cast<std::size_t>(q);
            for (std::size_t rank = 1; rank < space; ++rank) {
                auto s = c.syndrome_from_rank(rank);
                auto base = c.classify_syndrome(s);
                for (int a = 2; a < q; ++a) {
                    std::array<Fe, 4> scaled;
                    for (std::size_t i = 0; i < 4; ++i) scaled[i] = f.element(a) * s[i];
                    REQUIRE(c.classify_syndrome(scaled).cls == base.cls);
                }
            }
        }
    }
}

TEST_CASE("weight-3 counts per class") {
    CHECK(code::b3_closed_form(CosetClass::W3a, 7) == 5);
    CHECK(code::b3_closed_form(CosetClass::W2, 8) == 5);
    CHECK(code::b3_closed_form(CosetClass::W3c, 11) == 19);
    CHECK(code::b3_closed_form(CosetClass::Code, 7) == 0);
    CHECK(code::b3_closed_form(CosetClass::W1, 9) == 0);
    CHECK_THROWS_AS(code::b3_closed_form(CosetClass::W2a, 8), AtlasError);
    CHECK_THROWS_AS(code::b3_closed_form(CosetClass::W3c, 7), AtlasError);
}

TEST_CASE("B3 equals the incidence count, adjusted for chord planes") {
    for (int q : {5, 7, 8, 9, 11}) {
        CAPTURE(q);
        int xi = cubic::centered_residue(q);
        for (CosetClass cls : code::classes_for(xi)) {
            int w = code::leader_weight(cls);
            if (w < 2) continue;
            for (PointOrbitLabel label : code::orbits_for_class(cls, xi)) {
                long long r = cubic::r_closed_form(cubic::orbit_number(label), xi, q);
                long long expect = w == 2 ? r - (q - 1) : r;
                CHECK(code::b3_closed_form(cls, q) == expect);
            }
        }
    }
}

TEST_CASE("MDS code distribution") {
    CodeParameters cp5 = CodeParameters::for_q(5);
    CHECK(code::mds_weight_count(cp5, 5) == 24);
    CHECK(code::mds_weight_count(cp5, 6) == 0);
    for (int w = 1; w <= 4; ++w) CHECK(code::mds_weight_count(cp5, w) == 0);
    CHECK(code::mds_weight_count(cp5, 0) == 1);

    CodeParameters cp7 = CodeParameters::for_q(7);
    CHECK(code::mds_weight_count(cp7, 7) == 1056);
}

TEST_CASE("weight-1 coset distribution") {
    CHECK(code::wd_weight1(CodeParameters::for_q(5)) == dist_of({0, 1, 0, 0, 5, 15, 4}));
    auto w1 = code::wd_weight1(CodeParameters::for_q(8));
    CHECK(w1[4] == 70);
    CHECK(w1[5] == 588);
    CHECK(sum(code::wd_weight1(CodeParameters::for_q(5))) == 25);
}

TEST_CASE("weight-2 coset distribution") {
    CHECK(code::wd_weight2(CodeParameters::for_q(7), 3) ==
          dist_of({0, 0, 1, 3, 40, 182, 541, 935, 699}));
    CHECK(code::wd_weight2(CodeParameters::for_q(9), 7)[4] == 133);
    CHECK(code::wd_weight2(CodeParameters::for_q(5), 1)[4] == 6);
    CHECK_THROWS_AS(code::wd_weight2(CodeParameters::for_q(5), 3), AtlasError);
}

TEST_CASE("weight-3 coset distribution") {
    CHECK(code::wd_weight3(CodeParameters::for_q(5), 2) == dist_of({0, 0, 0, 2, 9, 6, 8}));
    CHECK(code::wd_weight3(CodeParameters::for_q(5), 4)[4] == 3);
    CHECK(code::wd_weight3(CodeParameters::for_q(11), 18)[4] == 333);
    CHECK_THROWS_AS(code::wd_weight3(CodeParameters::for_q(7), 6), AtlasError);
}

TEST_CASE("completion reproduces the closed forms") {
    CodeParameters cp5 = CodeParameters::for_q(5);
    CHECK(code::bonneau_complete(6, 5, 5, {Int(1), Int(0), Int(0), Int(0)}) ==
          code::mds_code_distribution(cp5));
    CHECK(code::bonneau_complete(6, 5, 5, {Int(0), Int(1), Int(0), Int(0)}) ==
          code::wd_weight1(cp5));
    CodeParameters cp7 = CodeParameters::for_q(7);
    CHECK(code::bonneau_complete(8, 5, 7, {Int(0), Int(0), Int(0), Int(7)}) ==
          code::wd_weight3(cp7, 7));
}

TEST_CASE("class distributions for every residue") {
    for (int q : {5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        CodeParameters cp = CodeParameters::for_q(q);
        Int size = ipow(static_cast<unsigned long>(q), static_cast<unsigned long>(cp.k));
        for (CosetClass cls : code::classes_for(cp.xi)) {
            auto dist = code::class_distribution(cp, cls);
            CHECK(sum(dist) == size);
            int lw = code::leader_weight(cls);
            for (int w = 1; w < lw; ++w) CHECK(dist[static_cast<std::size_t>(w)] == 0);
            CHECK(dist[static_cast<std::size_t>(lw)] >= 1);
        }
    }
}

TEST_CASE("coset distribution by syndrome") {
    const Code& c = code_for(5);
    const auto& f = c.geometry().field();
    auto [cls, dist] = c.coset_distribution({f.zero(), f.zero(), f.zero(), f.zero()});
    CHECK(cls == CosetClass::Code);
    CHECK(dist == code::mds_code_distribution(c.params()));
}

TEST_CASE("difference law") {
    auto report7 = code::difference_law_check(CodeParameters::for_q(7));
    bool found = false;
    for (const auto& e : report7.entries) {
        if (e.a == CosetClass::W2a && e.b == CosetClass::W2b && e.w == 4) {
            CHECK(e.lhs == 5); // 40 - 35 = -(+1)(3-4) C(5,1)
            CHECK(e.rhs == 5);
            found = true;
        }
    }
    CHECK(found);

    auto report11 = code::difference_law_check(CodeParameters::for_q(11));
    for (const auto& e : report11.entries) {
        if (e.a == CosetClass::W3a && e.b == CosetClass::W3c && e.w == 5) {
            CHECK(e.lhs == -144); // 5292 - 5436
        }
    }

    for (int q : {5, 8, 9, 13}) {
        CAPTURE(q);
        CHECK_NOTHROW(code::difference_law_check(CodeParameters::for_q(q)));
    }
}

TEST_CASE("symmetry of distributions") {
    auto r7 = code::symmetry_check(CodeParameters::for_q(7));
    CHECK(r7.constant_for(2, 4) == 975); // B7 + B4 across the weight-2 classes
    CHECK(r7.constant_for(3, 3) == 707); // B8 + B3 across the weight-3 classes

    auto r8 = code::symmetry_check(CodeParameters::for_q(8));
    CHECK(r8.constant_for(3, 5) == 6714); // B7 - B5

    auto r9 = code::symmetry_check(CodeParameters::for_q(9));
    CHECK(r9.constant_for(3, 6) == 46740); // B7 + B6

    for (int q : {5, 11, 13}) {
        CAPTURE(q);
        CHECK_NOTHROW(code::symmetry_check(CodeParameters::for_q(q)));
    }
}

TEST_CASE("classification counts") {
    CHECK(code::coset_count_closed_form(CosetClass::W3b, 5) == 160);
    CHECK(code::coset_count_closed_form(CosetClass::W3b, 9) == 2960);
    for (int q : {5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        auto counts = code::classification_counts(CodeParameters::for_q(q));
        Int total = 0;
        for (const auto& [cls, n] : counts) total += n;
        CHECK(total == ipow(static_cast<unsigned long>(q), 4));
        // weight-1 count (q+1)(q-1) plus the code itself appear in the total
        CHECK(counts[1].second == Int(q + 1) * Int(q - 1));
    }
}

TEST_CASE("coset counts equal orbit sizes times q-1") {
    for (int q : {5, 7, 8, 9, 11}) {
        CAPTURE(q);
        int xi = cubic::centered_residue(q);
        for (CosetClass cls : code::classes_for(xi)) {
            if (cls == CosetClass::Code) continue;
            long long orbit_total = 0;
            auto sizes = cubic::orbit_sizes_closed_form(xi, q);
            for (PointOrbitLabel label : code::orbits_for_class(cls, xi))
                orbit_total += sizes[static_cast<std::size_t>(cubic::orbit_number(label)) - 1];
            CHECK(code::coset_count_closed_form(cls, q) ==
                  Int(static_cast<long>(orbit_total)) * Int(q - 1));
        }
    }
}

TEST_CASE("dual weight set") {
    auto dual5 = code::dual_weight_set(code_for(5));
    CHECK(dual5.weights == std::set<int>{3, 4, 5, 6});
    CHECK(dual5.count == 4);
    CHECK(dual5.min_weight == 3);

    auto dual8 = code::dual_weight_set(code_for(8));
    CHECK(dual8.min_weight == 6); // q - 2
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(CodeParameters::for_q(4), AtlasError);
    CHECK_THROWS_AS(CodeParameters::for_q(6), AtlasError);
    CodeParameters cp = CodeParameters::for_q(8);
    CHECK(cp.n == 9);
    CHECK(cp.k == 5);
    CHECK(cp.d == 5);
    CHECK(cp.r == 3);
    CHECK(cp.xi == -1);
}

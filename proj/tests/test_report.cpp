#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coset_atlas/report.hpp"

using namespace coset_atlas;
using code::CodeParameters;
using report::Table1;
using report::Table2;

namespace {

bool tables_equal(const Table1& a, const Table1& b) {
    if (a.q != b.q || a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto& x = a.rows[i];
        const auto& y = b.rows[i];
        if (x.row != y.row || x.cls != y.cls || x.leader_weight != y.leader_weight ||
            x.b3 != y.b3 || x.cosets != y.cosets || x.orbits != y.orbits)
            return false;
    }
    return true;
}

bool tables_equal(const Table2& a, const Table2& b) {
    if (a.q != b.q || a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto& x = a.rows[i];
        const auto& y = b.rows[i];
        if (x.coset != y.coset || x.b != y.b || x.count != y.count) return false;
    }
    return true;
}

} // namespace

TEST_CASE("table row selection per residue") {
    Table1 t7 = report::render_table1(CodeParameters::for_q(7));
    std::vector<int> rows7;
    for (const auto& r : t7.rows) rows7.push_back(r.row);
    CHECK(rows7 == std::vector<int>{1, 2, 3, 4, 5, 6});

    Table1 t9 = report::render_table1(CodeParameters::for_q(9));
    std::vector<int> rows9;
    for (const auto& r : t9.rows) rows9.push_back(r.row);
    CHECK(rows9 == std::vector<int>{1, 2, 11, 12, 13});

    Table1 t8 = report::render_table1(CodeParameters::for_q(8));
    for (const auto& r : t8.rows)
        if (r.cls == code::CosetClass::W3b) CHECK(r.cosets == 1176);
}

TEST_CASE("fixture diffs pass for every reference q") {
    for (int q : {5, 7, 8, 9, 11}) {
        CAPTURE(q);
        REQUIRE(report::fixture_available(q));
        CodeParameters cp = CodeParameters::for_q(q);
        auto diff2 = report::diff_against_fixture(report::render_table2(cp),
                                                  report::load_table2_fixture(q));
        CHECK(diff2.pass);
        CHECK(diff2.mismatches.empty());
        auto diff1 = report::diff_against_fixture(report::render_table1(cp),
                                                  report::load_table1_fixture(q));
        CHECK(diff1.pass);
    }
}

TEST_CASE("fixture values spot checks") {
    auto t2 = report::load_table2_fixture(11);
    bool found = false;
    for (const auto& r : t2.rows) {
        if (r.coset != "V1") continue;
        CHECK(r.b[12] == parse_int("68301320"));
        found = true;
    }
    CHECK(found);
}

TEST_CASE("no fixture outside the reference set") {
    CHECK_FALSE(report::fixture_available(13));
    CHECK_THROWS_AS(report::load_table2_fixture(13), AtlasError);
    // rendering still works
    Table2 t13 = report::render_table2(CodeParameters::for_q(13));
    CHECK(t13.rows.size() == 6); // residue 1: code, V1, V2a, V2b, V3a, V3b
}

TEST_CASE("json round trip") {
    for (int q : {5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        CodeParameters cp = CodeParameters::for_q(q);
        Table1 t1 = report::render_table1(cp);
        Table2 t2 = report::render_table2(cp);
        CHECK(tables_equal(t1, report::table1_from_json(report::to_json(t1))));
        CHECK(tables_equal(t2, report::table2_from_json(report::to_json(t2))));
    }
}

TEST_CASE("diff reports cell-level mismatches") {
    CodeParameters cp = CodeParameters::for_q(5);
    Table2 computed = report::render_table2(cp);
    Table2 broken = computed;
    broken.rows[2].b[4] += 1;
    auto diff = report::diff_against_fixture(computed, broken);
    REQUIRE_FALSE(diff.pass);
    REQUIRE(diff.mismatches.size() == 1);
    CHECK(diff.mismatches[0].row == "V2");
    CHECK(diff.mismatches[0].column == "B4");
    CHECK(diff.mismatches[0].expected == "7"); // fixture cell (mutated)
    CHECK(diff.mismatches[0].got == "6");
}

TEST_CASE("format rendering") {
    CodeParameters cp = CodeParameters::for_q(5);
    Table2 t2 = report::render_table2(cp);

    std::string md = report::format_table(t2, report::Format::Markdown);
    CHECK(md.find("| coset |") != std::string::npos);
    CHECK(md.find("| code |") != std::string::npos);

    std::string csv = report::format_table(t2, report::Format::Csv);
    CHECK(csv.find("coset,B0,B1,B2,B3,B4,B5,B6,N\r\n") == 0);
    CHECK(csv.find("V3c,0,0,0,4,3,12,6,80\r\n") != std::string::npos);

    std::string js = report::format_table(t2, report::Format::Json);
    CHECK(js.find("\"table\": \"T2\"") != std::string::npos);

    CHECK_THROWS_AS(report::parse_format("yaml"), AtlasError);
}

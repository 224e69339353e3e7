#ifndef COSET_ATLAS_REPORT_HPP
#define COSET_ATLAS_REPORT_HPP

#include "coset_atlas/code.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace coset_atlas::report {

//! The classification table restricted to the rows that apply to q's residue:
//! coset class, leader weight, B_3, number of cosets and generating orbits.
struct Table1Row {
    int row;
    code::CosetClass cls;
    int leader_weight;
    long long b3;
    Int cosets;
    std::string orbits;
};
struct Table1 {
    int q;
    std::vector<Table1Row> rows;
};

//! Full weight distribution per coset class, plus the number of cosets.
struct Table2Row {
    std::string coset;
    std::vector<Int> b; // B_0..B_{q+1}
    Int count;
};
struct Table2 {
    int q;
    std::vector<Table2Row> rows;
};

Table1 render_table1(const code::CodeParameters& cp);
Table2 render_table2(const code::CodeParameters& cp);

enum class Format { Markdown, Csv, Json };
Format parse_format(const std::string& name); // "md" | "csv" | "json"

nlohmann::json to_json(const Table1& t);
nlohmann::json to_json(const Table2& t);
Table1 table1_from_json(const nlohmann::json& j);
Table2 table2_from_json(const nlohmann::json& j);

std::string format_table(const Table1& t, Format fmt);
std::string format_table(const Table2& t, Format fmt);

struct CellMismatch {
    std::string row;
    std::string column;
    std::string expected;
    std::string got;
};
struct DiffResult {
    bool pass = true;
    std::vector<CellMismatch> mismatches;
};

DiffResult diff_against_fixture(const Table1& computed, const Table1& fixture);
DiffResult diff_against_fixture(const Table2& computed, const Table2& fixture);

//! Directory holding the reference tables; COSET_ATLAS_DATA_DIR overrides the
//! baked-in source location.
std::filesystem::path data_dir();

bool fixture_available(int q);
Table1 load_table1_fixture(int q); // throws FixtureMissing
Table2 load_table2_fixture(int q); // throws FixtureMissing

} // namespace coset_atlas::report

#endif

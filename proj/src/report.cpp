#include "coset_atlas/report.hpp"

#include "coset_atlas/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace coset_atlas::report {

using nlohmann::json;

Table1 render_table1(const code::CodeParameters& cp) {
    Table1 t;
    t.q = cp.q;
    for (code::CosetClass cls : code::classes_for(cp.xi)) {
        Table1Row row;
        row.row = code::table_row(cls, cp.xi);
        row.cls = cls;
        row.leader_weight = code::leader_weight(cls);
        row.b3 = code::b3_closed_form(cls, cp.q);
        row.cosets = code::coset_count_closed_form(cls, cp.q);
        std::string orbits;
        for (cubic::PointOrbitLabel label : code::orbits_for_class(cls, cp.xi)) {
            if (!orbits.empty()) orbits += "+";
            orbits += "M" + std::to_string(cubic::orbit_number(label));
        }
        row.orbits = orbits;
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table2 render_table2(const code::CodeParameters& cp) {
    Table2 t;
    t.q = cp.q;
    for (code::CosetClass cls : code::classes_for(cp.xi)) {
        Table2Row row;
        row.coset = code::class_label(cls);
        row.b = code::class_distribution(cp, cls);
        row.count = code::coset_count_closed_form(cls, cp.q);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Format parse_format(const std::string& name) {
    if (name == "md" || name == "markdown") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    raise(Errc::UsageError, "unknown format '" + name + "' (expected md, csv or json)");
}

json to_json(const Table1& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"row", r.row},
                        {"coset", code::class_label(r.cls)},
                        {"W", r.leader_weight},
                        {"B3", std::to_string(r.b3)},
                        {"cosets", dec(r.cosets)},
                        {"orbits", r.orbits}});
    }
    return json{{"table", "T1"}, {"q", t.q}, {"rows", rows}};
}

json to_json(const Table2& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json b = json::array();
        for (const Int& v : r.b) b.push_back(dec(v));
        rows.push_back({{"coset", r.coset}, {"B", b}, {"N", dec(r.count)}});
    }
    return json{{"table", "T2"}, {"q", t.q}, {"rows", rows}};
}

Table1 table1_from_json(const json& j) {
    Table1 t;
    t.q = j.at("q").get<int>();
    for (const auto& jr : j.at("rows")) {
        Table1Row r;
        r.row = jr.at("row").get<int>();
        r.cls = code::class_from_label(jr.at("coset").get<std::string>());
        r.leader_weight = jr.at("W").get<int>();
        r.b3 = std::stoll(jr.at("B3").get<std::string>());
        r.cosets = parse_int(jr.at("cosets").get<std::string>());
        r.orbits = jr.at("orbits").get<std::string>();
        t.rows.push_back(std::move(r));
    }
    return t;
}

Table2 table2_from_json(const json& j) {
    Table2 t;
    t.q = j.at("q").get<int>();
    for (const auto& jr : j.at("rows")) {
        Table2Row r;
        r.coset = jr.at("coset").get<std::string>();
        for (const auto& cell : jr.at("B")) r.b.push_back(parse_int(cell.get<std::string>()));
        r.count = parse_int(jr.at("N").get<std::string>());
        t.rows.push_back(std::move(r));
    }
    return t;
}

namespace {

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(cells[i]);
    }
    out += "\r\n";
    return out;
}

std::string md_line(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    out += "\n";
    return out;
}

std::string md_separator(std::size_t cols) {
    std::string out = "|";
    for (std::size_t i = 0; i < cols; ++i) out += " --- |";
    out += "\n";
    return out;
}

template <typename Table, typename HeaderFn, typename RowFn>
std::string tabulate(const Table& t, Format fmt, HeaderFn header, RowFn row_cells) {
    if (fmt == Format::Json) return to_json(t).dump(2) + "\n";
    std::string out;
    std::vector<std::string> head = header(t);
    if (fmt == Format::Markdown) {
        out += md_line(head);
        out += md_separator(head.size());
        for (const auto& r : t.rows) out += md_line(row_cells(r));
    } else {
        out += csv_line(head);
        for (const auto& r : t.rows) out += csv_line(row_cells(r));
    }
    return out;
}

} // namespace

std::string format_table(const Table1& t, Format fmt) {
    return tabulate(
        t, fmt,
        [](const Table1&) {
            return std::vector<std::string>{"row", "coset", "W", "B3", "cosets", "orbits"};
        },
        [](const Table1Row& r) {
            return std::vector<std::string>{std::to_string(r.row), code::class_label(r.cls),
                                            std::to_string(r.leader_weight),
                                            std::to_string(r.b3), dec(r.cosets), r.orbits};
        });
}

std::string format_table(const Table2& t, Format fmt) {
    return tabulate(
        t, fmt,
        [](const Table2& table) {
            std::vector<std::string> head{"coset"};
            for (std::size_t w = 0; w < table.rows.front().b.size(); ++w)
                head.push_back("B" + std::to_string(w));
            head.push_back("N");
            return head;
        },
        [](const Table2Row& r) {
            std::vector<std::string> cells{r.coset};
            for (const Int& v : r.b) cells.push_back(dec(v));
            cells.push_back(dec(r.count));
            return cells;
        });
}

namespace {

void compare_cell(DiffResult& out, const std::string& row, const std::string& column,
                  const std::string& expected, const std::string& got) {
    if (expected == got) return;
    out.pass = false;
    out.mismatches.push_back({row, column, expected, got});
}

} // namespace

DiffResult diff_against_fixture(const Table1& computed, const Table1& fixture) {
    DiffResult out;
    compare_cell(out, "-", "q", std::to_string(fixture.q), std::to_string(computed.q));
    compare_cell(out, "-", "rows", std::to_string(fixture.rows.size()),
                 std::to_string(computed.rows.size()));
    std::size_t count = std::min(computed.rows.size(), fixture.rows.size());
    for (std::size_t i = 0; i < count; ++i) {
        const auto& got = computed.rows[i];
        const auto& want = fixture.rows[i];
        std::string row = code::class_label(want.cls);
        compare_cell(out, row, "row", std::to_string(want.row), std::to_string(got.row));
        compare_cell(out, row, "coset", code::class_label(want.cls), code::class_label(got.cls));
        compare_cell(out, row, "W", std::to_string(want.leader_weight),
                     std::to_string(got.leader_weight));
        compare_cell(out, row, "B3", std::to_string(want.b3), std::to_string(got.b3));
        compare_cell(out, row, "cosets", dec(want.cosets), dec(got.cosets));
        compare_cell(out, row, "orbits", want.orbits, got.orbits);
    }
    return out;
}

DiffResult diff_against_fixture(const Table2& computed, const Table2& fixture) {
    DiffResult out;
    compare_cell(out, "-", "q", std::to_string(fixture.q), std::to_string(computed.q));
    compare_cell(out, "-", "rows", std::to_string(fixture.rows.size()),
                 std::to_string(computed.rows.size()));
    std::size_t count = std::min(computed.rows.size(), fixture.rows.size());
    for (std::size_t i = 0; i < count; ++i) {
        const auto& got = computed.rows[i];
        const auto& want = fixture.rows[i];
        const std::string& row = want.coset;
        compare_cell(out, row, "coset", want.coset, got.coset);
        compare_cell(out, row, "cells", std::to_string(want.b.size()),
                     std::to_string(got.b.size()));
        std::size_t cells = std::min(want.b.size(), got.b.size());
        for (std::size_t w = 0; w < cells; ++w)
            compare_cell(out, row, "B" + std::to_string(w), dec(want.b[w]), dec(got.b[w]));
        compare_cell(out, row, "N", dec(want.count), dec(got.count));
    }
    return out;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("COSET_ATLAS_DATA_DIR"); env != nullptr && *env != '\0')
        return env;
#ifdef COSET_ATLAS_DATA_DIR
    return COSET_ATLAS_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

json load_fixture_json(const std::string& name, int q) {
    std::filesystem::path path = data_dir() / "fixtures" / (name + "_q" + std::to_string(q) + ".json");
    std::ifstream in(path);
    if (!in) raise(Errc::FixtureMissing, "no fixture file " + path.string());
    json j;
    in >> j;
    return j;
}

} // namespace

bool fixture_available(int q) {
    std::filesystem::path path = data_dir() / "fixtures" / ("table2_q" + std::to_string(q) + ".json");
    return std::filesystem::exists(path);
}

Table1 load_table1_fixture(int q) { return table1_from_json(load_fixture_json("table1", q)); }
Table2 load_table2_fixture(int q) { return table2_from_json(load_fixture_json("table2", q)); }

} // namespace coset_atlas::report

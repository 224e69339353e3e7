#include "coset_atlas/errors.hpp"
#include "coset_atlas/oracle.hpp"
#include "coset_atlas/report.hpp"
#include "coset_atlas/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ca = coset_atlas;
using nlohmann::json;

namespace {

struct RunConfig {
    int q = 0;
    std::string field_spec;
    std::string format = "md";
    std::string out_path;
    std::string level = "all";
    std::string syndrome;
    int jobs = 0; // 0 = available parallelism
};

ca::cubic::GeometryContext build_geometry(const RunConfig& cfg) {
    if (!cfg.field_spec.empty()) {
        auto geo = ca::cubic::GeometryContext::for_field_spec(cfg.field_spec, cfg.jobs);
        if (cfg.q != 0 && cfg.q != geo.q())
            ca::raise(ca::Errc::UsageError, "--q disagrees with the order of --field");
        return geo;
    }
    if (cfg.q == 0) ca::raise(ca::Errc::UsageError, "either --q or --field is required");
    return ca::cubic::GeometryContext::for_order(cfg.q, cfg.jobs);
}

// The classification and distribution tables are pure closed forms; they do
// not need the point-by-point geometry.
int resolve_q(const RunConfig& cfg) {
    if (!cfg.field_spec.empty()) {
        int q = ca::gf::parse_field_spec(cfg.field_spec).order();
        if (cfg.q != 0 && cfg.q != q)
            ca::raise(ca::Errc::UsageError, "--q disagrees with the order of --field");
        return q;
    }
    if (cfg.q == 0) ca::raise(ca::Errc::UsageError, "either --q or --field is required");
    return cfg.q;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) ca::raise(ca::Errc::UsageError, "cannot open output file " + cfg.out_path);
    out << text;
}

// Plain header+rows table in the same three formats the report tables use.
std::string render_rows(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows,
                        ca::report::Format fmt, const std::string& json_name) {
    using ca::report::Format;
    std::ostringstream os;
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        os << json{{json_name, arr}}.dump(2) << "\n";
        return os.str();
    }
    if (fmt == Format::Markdown) {
        auto line = [&os](const std::vector<std::string>& cells) {
            os << "|";
            for (const auto& c : cells) os << " " << c << " |";
            os << "\n";
        };
        line(header);
        os << "|";
        for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : rows) line(row);
        return os.str();
    }
    auto csv_line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ",";
            os << cells[i]; // cells here never need quoting
        }
        os << "\r\n";
    };
    csv_line(header);
    for (const auto& row : rows) csv_line(row);
    return os.str();
}

int run_orbits(const RunConfig& cfg) {
    auto geo = build_geometry(cfg);
    auto census = geo.point_orbit_census();
    auto closed = ca::cubic::orbit_sizes_closed_form(geo.xi(), geo.q());

    std::vector<ca::cubic::PointOrbitLabel> labels;
    if (geo.xi() == 0)
        labels = {ca::cubic::PointOrbitLabel::CubicPoint, ca::cubic::PointOrbitLabel::AxisPoint,
                  ca::cubic::PointOrbitLabel::TOPoint, ca::cubic::PointOrbitLabel::RCPoint,
                  ca::cubic::PointOrbitLabel::ICPoint};
    else
        labels = {ca::cubic::PointOrbitLabel::CubicPoint, ca::cubic::PointOrbitLabel::TPoint,
                  ca::cubic::PointOrbitLabel::ThreeGamma, ca::cubic::PointOrbitLabel::OneGamma,
                  ca::cubic::PointOrbitLabel::ZeroGamma};

    bool all_match = true;
    std::vector<std::vector<std::string>> rows;
    for (int j = 0; j < 5; ++j) {
        bool match = static_cast<long long>(census[static_cast<std::size_t>(j)]) ==
                     closed[static_cast<std::size_t>(j)];
        all_match = all_match && match;
        rows.push_back({"M" + std::to_string(j + 1),
                        ca::cubic::label_name(labels[static_cast<std::size_t>(j)]),
                        std::to_string(census[static_cast<std::size_t>(j)]),
                        std::to_string(closed[static_cast<std::size_t>(j)]),
                        match ? "yes" : "NO"});
    }
    emit(cfg, render_rows({"orbit", "label", "computed", "closed_form", "match"}, rows,
                          ca::report::parse_format(cfg.format), "orbits"));
    return all_match ? 0 : 1;
}

int run_incidence(const RunConfig& cfg) {
    auto geo = build_geometry(cfg);
    // Computed r_3j: collect the (constant) per-orbit count over all points.
    std::array<long long, 5> computed{};
    std::array<bool, 5> constant{true, true, true, true, true};
    std::array<bool, 5> seen{};
    for (const auto& p : geo.points()) {
        int j = ca::cubic::orbit_number(geo.classify_point(p));
        long long count = geo.three_plane_count(p);
        if (!seen[static_cast<std::size_t>(j - 1)]) {
            computed[static_cast<std::size_t>(j - 1)] = count;
            seen[static_cast<std::size_t>(j - 1)] = true;
        } else if (computed[static_cast<std::size_t>(j - 1)] != count) {
            constant[static_cast<std::size_t>(j - 1)] = false;
        }
    }
    bool all_match = true;
    std::vector<std::vector<std::string>> rows;
    for (int j = 1; j <= 5; ++j) {
        long long closed = ca::cubic::r_closed_form(j, geo.xi(), geo.q());
        bool match = constant[static_cast<std::size_t>(j - 1)] &&
                     computed[static_cast<std::size_t>(j - 1)] == closed;
        all_match = all_match && match;
        rows.push_back({"r3" + std::to_string(j),
                        std::to_string(computed[static_cast<std::size_t>(j - 1)]),
                        constant[static_cast<std::size_t>(j - 1)] ? "yes" : "NO",
                        std::to_string(closed), match ? "yes" : "NO"});
    }
    emit(cfg, render_rows({"r3j", "computed", "constant_on_orbit", "closed_form", "match"},
                          rows, ca::report::parse_format(cfg.format), "incidence"));
    return all_match ? 0 : 1;
}

int run_table1(const RunConfig& cfg) {
    auto table = ca::report::render_table1(ca::code::CodeParameters::for_q(resolve_q(cfg)));
    emit(cfg, ca::report::format_table(table, ca::report::parse_format(cfg.format)));
    return 0;
}

int run_table2(const RunConfig& cfg) {
    auto table = ca::report::render_table2(ca::code::CodeParameters::for_q(resolve_q(cfg)));
    emit(cfg, ca::report::format_table(table, ca::report::parse_format(cfg.format)));
    return 0;
}

int run_coset(const RunConfig& cfg) {
    auto geo = build_geometry(cfg);
    ca::code::Code code(geo);
    const auto& f = geo.field();

    std::vector<int> indices;
    std::stringstream ss(cfg.syndrome);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            indices.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            ca::raise(ca::Errc::UsageError, "bad element index '" + tok + "' in --syndrome");
        }
    }
    for (int idx : indices)
        if (idx < 0 || idx >= geo.q())
            ca::raise(ca::Errc::UsageError, "element index out of [0,q)");

    std::array<ca::gf::Fe, 4> s{f.zero(), f.zero(), f.zero(), f.zero()};
    if (indices.size() == 4) {
        for (std::size_t i = 0; i < 4; ++i) s[i] = f.element(indices[i]);
    } else if (static_cast<int>(indices.size()) == code.params().n) {
        std::vector<ca::gf::Fe> x;
        for (int idx : indices) x.push_back(f.element(idx));
        auto sv = code.syndrome(x);
        for (std::size_t i = 0; i < 4; ++i) s[i] = sv[i];
    } else {
        ca::raise(ca::Errc::UsageError,
                  "--syndrome takes 4 element indices or a vector of length q+1");
    }

    auto [cls, dist] = code.coset_distribution(s);
    json b = json::array();
    for (const ca::Int& v : dist) b.push_back(ca::dec(v));
    json out{{"q", geo.q()},
             {"class", ca::code::class_label(cls)},
             {"W", ca::code::leader_weight(cls)},
             {"B", b}};
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

int run_verify(const RunConfig& cfg) {
    auto geo = build_geometry(cfg);
    auto report = ca::verify::run(geo, ca::verify::parse_level(cfg.level), cfg.jobs);

    std::ostringstream os;
    json failures = json::array();
    for (const auto& check : report.checks) {
        os << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) os << " - " << check.detail;
        os << "\n";
        if (!check.pass) failures.push_back({{"name", check.name}, {"detail", check.detail}});
    }
    if (!report.all_pass()) {
        os << json{{"q", geo.q()}, {"level", cfg.level}, {"failures", failures}}.dump(2)
           << "\n";
    }
    emit(cfg, os.str());
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coset weight distributions of the [q+1,q-3,5] code from the twisted cubic in PG(3,q)"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--q", cfg.q, "field order q (prime power, 5 <= q <= 128)");
        sub->add_option("--field", cfg.field_spec,
                        "field spec p^m:c0,c1,...,cm (modulus coefficients, low degree first)");
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: available parallelism)");
        sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
        if (with_format)
            sub->add_option("--format", cfg.format, "output format: md, csv or json")
                ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
    };

    CLI::App* orbits = app.add_subcommand("orbits", "point orbit census vs closed forms");
    add_common(orbits, true);
    CLI::App* incidence =
        app.add_subcommand("incidence", "3-point-plane counts per orbit vs closed forms");
    add_common(incidence, true);
    CLI::App* table1 = app.add_subcommand("table1", "coset classification table");
    add_common(table1, true);
    CLI::App* table2 = app.add_subcommand("table2", "coset weight distribution table");
    add_common(table2, true);
    CLI::App* coset = app.add_subcommand("coset", "classify one coset and print its distribution");
    add_common(coset, false);
    coset->add_option("--syndrome", cfg.syndrome,
                      "4 comma-separated element indices, or a vector of q+1 indices")
        ->required();
    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify, false);
    verify
        ->add_option("--level", cfg.level,
                     "identities | orbits | incidence | table1 | table2 | brute | laws | all")
        ->check(CLI::IsMember(
            {"identities", "orbits", "incidence", "table1", "table2", "brute", "laws", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help exits 0, usage errors exit 2
    }

    try {
        if (orbits->parsed()) return run_orbits(cfg);
        if (incidence->parsed()) return run_incidence(cfg);
        if (table1->parsed()) return run_table1(cfg);
        if (table2->parsed()) return run_table2(cfg);
        if (coset->parsed()) return run_coset(cfg);
        if (verify->parsed()) return run_verify(cfg);
    } catch (const ca::AtlasError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ca::Errc::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

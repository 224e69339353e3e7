#include "coset_atlas/verify.hpp"

#include "coset_atlas/errors.hpp"
#include "coset_atlas/oracle.hpp"
#include "coset_atlas/report.hpp"

#include <map>
#include <set>
#include <sstream>

namespace coset_atlas::verify {

using code::Code;
using code::CodeParameters;
using code::CosetClass;
using cubic::GeometryContext;
using gf::Fe;
using gf::Field;

Level parse_level(const std::string& name) {
    if (name == "identities") return Level::Identities;
    if (name == "orbits") return Level::Orbits;
    if (name == "incidence") return Level::Incidence;
    if (name == "table1") return Level::Table1;
    if (name == "table2") return Level::Table2;
    if (name == "brute") return Level::Brute;
    if (name == "laws") return Level::Laws;
    if (name == "all") return Level::All;
    raise(Errc::UsageError, "unknown verify level '" + name + "'");
}

const char* level_name(Level level) {
    switch (level) {
    case Level::Identities: return "identities";
    case Level::Orbits: return "orbits";
    case Level::Incidence: return "incidence";
    case Level::Table1: return "table1";
    case Level::Table2: return "table2";
    case Level::Brute: return "brute";
    case Level::Laws: return "laws";
    case Level::All: return "all";
    }
    return "?";
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

// Wraps a check body so that a thrown AtlasError turns into a failed entry
// instead of aborting the remaining checks.
template <typename Fn>
void guarded(Report& report, const std::string& name, Fn fn) {
    try {
        fn();
    } catch (const AtlasError& e) {
        report.add(name, false, e.what());
    }
}

void check_identities(const GeometryContext& geo, Report& report) {
    const Field& f = geo.field();
    int q = f.order();
    auto elems = f.all_elements();

    guarded(report, "gf.axioms", [&] {
        // Exhaustive triple check for small fields, deterministic stride above.
        int stride = q <= 16 ? 1 : 5;
        long long checked = 0;
        for (int a = 0; a < q; a += stride)
            for (int b = 0; b < q; b += stride)
                for (int c = 0; c < q; c += stride) {
                    Fe ea = elems[static_cast<std::size_t>(a)];
                    Fe eb = elems[static_cast<std::size_t>(b)];
                    Fe ec = elems[static_cast<std::size_t>(c)];
                    invariant((ea + eb) + ec == ea + (eb + ec), "addition associativity");
                    invariant((ea * eb) * ec == ea * (eb * ec), "multiplication associativity");
                    invariant(ea * (eb + ec) == ea * eb + ea * ec, "distributivity");
                    ++checked;
                }
        for (Fe a : elems)
            for (Fe b : elems) {
                invariant(a + b == b + a, "addition commutativity");
                invariant(a * b == b * a, "multiplication commutativity");
            }
        for (Fe a : elems) {
            invariant(a + f.zero() == a, "additive identity");
            invariant(a * f.one() == a, "multiplicative identity");
            invariant(a + (-a) == f.zero(), "additive inverse");
        }
        report.add("gf.axioms", true, std::to_string(checked) + " triples");
    });

    guarded(report, "gf.multiplicative-order", [&] {
        for (Fe a : elems) {
            if (a.is_zero()) continue;
            invariant(a.pow(q - 1) == f.one(), "a^(q-1) must be 1");
            invariant(a * a.inverse() == f.one(), "a * a^-1 must be 1");
        }
        report.add("gf.multiplicative-order", true,
                   std::to_string(q - 1) + " nonzero elements");
    });
}

void check_orbits(const GeometryContext& geo, Report& report) {
    int q = geo.q();
    guarded(report, "orbits.point-census", [&] {
        auto census = geo.point_orbit_census();
        auto expected = cubic::orbit_sizes_closed_form(geo.xi(), q);
        for (int j = 0; j < 5; ++j)
            invariant(static_cast<long long>(census[static_cast<std::size_t>(j)]) ==
                          expected[static_cast<std::size_t>(j)],
                      "orbit M" + std::to_string(j + 1) + " cardinality mismatch: got " +
                          std::to_string(census[static_cast<std::size_t>(j)]) + ", want " +
                          std::to_string(expected[static_cast<std::size_t>(j)]));
        std::ostringstream os;
        for (int j = 0; j < 5; ++j) {
            if (j) os << "/";
            os << census[static_cast<std::size_t>(j)];
        }
        report.add("orbits.point-census", true, os.str());
    });

    guarded(report, "orbits.plane-census", [&] {
        auto census = geo.plane_orbit_census();
        long long qq = q;
        std::size_t total = 0;
        for (std::size_t c : census) total += c;
        invariant(total == geom::space_size(geo.field()), "plane orbits must partition");
        invariant(static_cast<long long>(census[0]) == qq + 1, "N1 must have q+1 planes");
        invariant(static_cast<long long>(census[2]) == (qq * qq * qq - qq) / 6,
                  "N3 must have (q^3-q)/6 planes");
        report.add("orbits.plane-census", true,
                   "N3 = " + std::to_string(census[2]));
    });
}

void check_incidence(const GeometryContext& geo, Report& report) {
    int q = geo.q();
    guarded(report, "incidence.three-plane-counts", [&] {
        const auto& points = geo.points();
        for (const auto& p : points) {
            int j = cubic::orbit_number(geo.classify_point(p));
            long long expected = cubic::r_closed_form(j, geo.xi(), q);
            long long got = geo.three_plane_count(p);
            invariant(got == expected,
                      "point in M" + std::to_string(j) + " lies on " + std::to_string(got) +
                          " 3-point planes, want " + std::to_string(expected));
        }
        report.add("incidence.three-plane-counts", true,
                   std::to_string(points.size()) + " points");
    });

    guarded(report, "incidence.chord-plane-counts", [&] {
        int chords = 0;
        for (int i = 0; i <= q; ++i) {
            for (int j = i + 1; j <= q; ++j) {
                auto [three_c, two_c] = geo.chord_plane_counts(
                    cubic::ChordClass{cubic::ChordClass::Kind::Real, i, j});
                invariant(three_c == q - 1 && two_c == 2, "chord plane counts");
                ++chords;
            }
        }
        report.add("incidence.chord-plane-counts", true,
                   std::to_string(chords) + " real chords at (q-1, 2)");
    });
}

void check_table1(const GeometryContext& geo, Report& report, int jobs) {
    Code c(geo);
    const CodeParameters& cp = c.params();
    std::size_t space = 1;
    for (int i = 0; i < 4; ++i) space *= static_cast<std::size_t>(cp.q);

    guarded(report, "table1.b3-histogram", [&] {
        auto hist = oracle::histogram_weight_w(geo.field(), c.parity_check(), 3, jobs);
        std::map<CosetClass, Int> seen_counts;
        for (std::size_t rank = 0; rank < space; ++rank) {
            auto s = c.syndrome_from_rank(rank);
            CosetClass cls = c.classify_syndrome(s).cls;
            long long expected = code::b3_closed_form(cls, cp.q);
            invariant(hist[rank] == expected,
                      "B3 mismatch at syndrome rank " + std::to_string(rank) + ": histogram " +
                          std::to_string(hist[rank]) + ", closed form " +
                          std::to_string(expected) + " (" + code::class_label(cls) + ")");
            seen_counts[cls] += 1;
        }
        for (const auto& [cls, count] : code::classification_counts(cp))
            invariant(seen_counts[cls] == count,
                      "coset count mismatch for " + code::class_label(cls) + ": classified " +
                          dec(seen_counts[cls]) + ", closed form " + dec(count));
        report.add("table1.b3-histogram", true,
                   std::to_string(space) + " syndromes, histogram == closed form");
    });

    guarded(report, "table1.b3-from-incidence", [&] {
        // Table values restated through the incidence counts: weight-2 classes
        // subtract the q-1 planes through the chord itself, weight-3 classes
        // take the count as is.
        for (CosetClass cls : code::classes_for(cp.xi)) {
            int w = code::leader_weight(cls);
            if (w < 2) continue;
            for (cubic::PointOrbitLabel label : code::orbits_for_class(cls, cp.xi)) {
                long long r = cubic::r_closed_form(cubic::orbit_number(label), cp.xi, cp.q);
                long long expected = w == 2 ? r - (cp.q - 1) : r;
                invariant(code::b3_closed_form(cls, cp.q) == expected,
                          "B3 closed form inconsistent with incidence counts for " +
                              code::class_label(cls));
            }
        }
        report.add("table1.b3-from-incidence", true);
    });

    guarded(report, "table1.fixture", [&] {
        if (!report::fixture_available(cp.q)) {
            report.add("table1.fixture", true, "no fixture for q = " + std::to_string(cp.q));
            return;
        }
        auto diff = report::diff_against_fixture(report::render_table1(cp),
                                                 report::load_table1_fixture(cp.q));
        invariant(diff.pass, "table1 differs from fixture in " +
                                 std::to_string(diff.mismatches.size()) + " cells");
        report.add("table1.fixture", true);
    });
}

void check_table2(const GeometryContext& geo, Report& report) {
    CodeParameters cp = CodeParameters::for_q(geo.q());

    guarded(report, "table2.fixture", [&] {
        if (!report::fixture_available(cp.q)) {
            report.add("table2.fixture", true, "no fixture for q = " + std::to_string(cp.q));
            return;
        }
        auto diff = report::diff_against_fixture(report::render_table2(cp),
                                                 report::load_table2_fixture(cp.q));
        std::string detail;
        for (const auto& m : diff.mismatches)
            detail += " [" + m.row + "." + m.column + ": want " + m.expected + ", got " + m.got + "]";
        invariant(diff.pass, "table2 differs from fixture:" + detail);
        report.add("table2.fixture", true);
    });

    guarded(report, "table2.coset-mass", [&] {
        Int size = ipow(static_cast<unsigned long>(cp.q), static_cast<unsigned long>(cp.k));
        for (CosetClass cls : code::classes_for(cp.xi))
            invariant(sum(code::class_distribution(cp, cls)) == size,
                      "distribution mass for " + code::class_label(cls));
        report.add("table2.coset-mass", true, "all classes sum to q^(q-3)");
    });

    guarded(report, "table2.global-balance", [&] {
        // Summing B_w over all q^4 cosets must count every weight-w vector of
        // the ambient space exactly once.
        auto counts = code::classification_counts(cp);
        for (int w = 0; w <= cp.n; ++w) {
            Int total = 0;
            for (const auto& [cls, count] : counts)
                total += count * code::class_distribution(cp, cls)[static_cast<std::size_t>(w)];
            Int expected =
                binom(static_cast<unsigned long>(cp.n), static_cast<unsigned long>(w)) *
                ipow(static_cast<unsigned long>(cp.q - 1), static_cast<unsigned long>(w));
            invariant(total == expected, "global balance at w = " + std::to_string(w));
        }
        report.add("table2.global-balance", true, "all weights 0..q+1");
    });

    guarded(report, "table2.completion-agreement", [&] {
        for (CosetClass cls : code::classes_for(cp.xi)) {
            long long b3 = code::b3_closed_form(cls, cp.q);
            std::vector<Int> low(4, Int(0));
            switch (code::leader_weight(cls)) {
            case 0: low[0] = 1; break;
            case 1: low[1] = 1; break;
            case 2:
                low[2] = 1;
                low[3] = static_cast<long>(b3);
                break;
            default: low[3] = static_cast<long>(b3); break;
            }
            invariant(code::bonneau_complete(cp.n, cp.d, cp.q, low) ==
                          code::class_distribution(cp, cls),
                      "completion disagrees for " + code::class_label(cls));
        }
        report.add("table2.completion-agreement", true);
    });

    guarded(report, "table2.dual-weights", [&] {
        Code c(geo);
        auto dual = code::dual_weight_set(c);
        std::ostringstream os;
        os << "S = {";
        bool first = true;
        for (int w : dual.weights) {
            if (!first) os << ",";
            os << w;
            first = false;
        }
        os << "}";
        report.add("table2.dual-weights", true, os.str());
    });
}

void check_brute(const GeometryContext& geo, Report& report, int jobs) {
    Code c(geo);
    const CodeParameters& cp = c.params();
    if (cp.q > 9) {
        raise(Errc::ScopeExceeded, "brute verification is limited to q <= 9");
    }
    std::size_t space = 1;
    for (int i = 0; i < 4; ++i) space *= static_cast<std::size_t>(cp.q);

    guarded(report, "brute.leader-weights", [&] {
        auto sweep = oracle::leader_weight_sweep(geo.field(), c.parity_check());
        for (std::size_t rank = 0; rank < space; ++rank) {
            auto classified = c.classify_syndrome(c.syndrome_from_rank(rank));
            invariant(sweep[rank] == classified.leader_weight,
                      "leader weight mismatch at rank " + std::to_string(rank) + ": brute " +
                          std::to_string(sweep[rank]) + ", classified " +
                          std::to_string(classified.leader_weight));
        }
        report.add("brute.leader-weights", true, std::to_string(space) + " syndromes checked");
    });

    guarded(report, "brute.coset-distributions", [&] {
        std::set<CosetClass> done;
        std::size_t classes = code::classes_for(cp.xi).size();
        for (std::size_t rank = 0; rank < space && done.size() < classes; ++rank) {
            auto s = c.syndrome_from_rank(rank);
            CosetClass cls = c.classify_syndrome(s).cls;
            if (done.contains(cls)) continue;
            auto rep = oracle::find_representative(geo.field(), c.parity_check(), s);
            int rep_weight = 0;
            for (const Fe& e : rep)
                if (!e.is_zero()) ++rep_weight;
            invariant(rep_weight == code::leader_weight(cls),
                      "representative weight mismatch for " + code::class_label(cls));
            auto brute = oracle::brute_coset_distribution(geo.field(), c.parity_check(), rep, jobs);
            invariant(brute == code::class_distribution(cp, cls),
                      "brute distribution differs for " + code::class_label(cls));
            done.insert(cls);
        }
        invariant(done.size() == classes, "not every class was represented");
        report.add("brute.coset-distributions", true,
                   std::to_string(classes) + " classes enumerated in full");
    });
}

void check_laws(const GeometryContext& geo, Report& report) {
    CodeParameters cp = CodeParameters::for_q(geo.q());
    guarded(report, "laws.difference", [&] {
        auto r = code::difference_law_check(cp);
        report.add("laws.difference", true, std::to_string(r.entries.size()) + " comparisons");
    });
    guarded(report, "laws.symmetry", [&] {
        auto r = code::symmetry_check(cp);
        report.add("laws.symmetry", true, std::to_string(r.entries.size()) + " constants");
    });
}

} // namespace

Report run(const GeometryContext& geo, Level level, int jobs) {
    Report report;
    bool all = level == Level::All;
    if (all || level == Level::Identities) check_identities(geo, report);
    if (all || level == Level::Orbits) check_orbits(geo, report);
    if (all || level == Level::Incidence) check_incidence(geo, report);
    if (all || level == Level::Table1) check_table1(geo, report, jobs);
    if (all || level == Level::Table2) check_table2(geo, report);
    if (level == Level::Brute || (all && geo.q() <= 9)) {
        try {
            check_brute(geo, report, jobs);
        } catch (const AtlasError& e) {
            report.add("brute", false, e.what());
        }
    }
    if (all || level == Level::Laws) check_laws(geo, report);
    return report;
}

} // namespace coset_atlas::verify

#include "coset_atlas/code.hpp"

#include "coset_atlas/errors.hpp"

#include <algorithm>
#include <random>

namespace coset_atlas::code {

using cubic::PointOrbitLabel;

CodeParameters CodeParameters::for_q(int q) {
    if (q < 5 || q > 128)
        raise(Errc::UnsupportedOrder, "q = " + std::to_string(q) + " outside [5, 128]");
    gf::factor_prime_power(q);
    return CodeParameters{q, q + 1, q - 3, 5, 3, cubic::centered_residue(q)};
}

int leader_weight(CosetClass cls) {
    switch (cls) {
    case CosetClass::Code: return 0;
    case CosetClass::W1: return 1;
    case CosetClass::W2:
    case CosetClass::W2a:
    case CosetClass::W2b: return 2;
    case CosetClass::W3a:
    case CosetClass::W3b:
    case CosetClass::W3c: return 3;
    }
    return -1;
}

bool class_valid(CosetClass cls, int xi) {
    switch (cls) {
    case CosetClass::Code:
    case CosetClass::W1:
    case CosetClass::W3a:
    case CosetClass::W3b: return true;
    case CosetClass::W2: return xi != 1;
    case CosetClass::W2a:
    case CosetClass::W2b: return xi == 1;
    case CosetClass::W3c: return xi == -1;
    }
    return false;
}

std::vector<CosetClass> classes_for(int xi) {
    if (xi == 1)
        return {CosetClass::Code, CosetClass::W1, CosetClass::W2a, CosetClass::W2b,
                CosetClass::W3a, CosetClass::W3b};
    if (xi == -1)
        return {CosetClass::Code, CosetClass::W1, CosetClass::W2, CosetClass::W3a,
                CosetClass::W3b, CosetClass::W3c};
    return {CosetClass::Code, CosetClass::W1, CosetClass::W2, CosetClass::W3a,
            CosetClass::W3b};
}

int table_row(CosetClass cls, int xi) {
    switch (cls) {
    case CosetClass::Code: return 1;
    case CosetClass::W1: return 2;
    case CosetClass::W2a: return 3;
    case CosetClass::W2b: return 4;
    default: break;
    }
    if (xi == 1) return cls == CosetClass::W3a ? 5 : 6;
    if (xi == -1) {
        switch (cls) {
        case CosetClass::W2: return 7;
        case CosetClass::W3a: return 8;
        case CosetClass::W3b: return 9;
        case CosetClass::W3c: return 10;
        default: break;
        }
    }
    switch (cls) {
    case CosetClass::W2: return 11;
    case CosetClass::W3a: return 12;
    case CosetClass::W3b: return 13;
    default: break;
    }
    return 0;
}

std::string class_label(CosetClass cls) {
    switch (cls) {
    case CosetClass::Code: return "code";
    case CosetClass::W1: return "V1";
    case CosetClass::W2: return "V2";
    case CosetClass::W2a: return "V2a";
    case CosetClass::W2b: return "V2b";
    case CosetClass::W3a: return "V3a";
    case CosetClass::W3b: return "V3b";
    case CosetClass::W3c: return "V3c";
    }
    return "?";
}

CosetClass class_from_label(const std::string& label) {
    for (CosetClass cls : {CosetClass::Code, CosetClass::W1, CosetClass::W2, CosetClass::W2a,
                           CosetClass::W2b, CosetClass::W3a, CosetClass::W3b, CosetClass::W3c})
        if (class_label(cls) == label) return cls;
    raise(Errc::UsageError, "unknown coset class label: " + label);
}

CosetClass class_for_orbit(PointOrbitLabel label, int xi) {
    if (label == PointOrbitLabel::CubicPoint) return CosetClass::W1;
    if (xi == 1) {
        switch (label) {
        case PointOrbitLabel::ZeroGamma: return CosetClass::W2a;
        case PointOrbitLabel::ThreeGamma: return CosetClass::W2b;
        case PointOrbitLabel::TPoint: return CosetClass::W3a;
        case PointOrbitLabel::OneGamma: return CosetClass::W3b;
        default: break;
        }
    } else if (xi == -1) {
        switch (label) {
        case PointOrbitLabel::OneGamma: return CosetClass::W2;
        case PointOrbitLabel::TPoint: return CosetClass::W3a;
        case PointOrbitLabel::ZeroGamma: return CosetClass::W3b;
        case PointOrbitLabel::ThreeGamma: return CosetClass::W3c;
        default: break;
        }
    } else {
        switch (label) {
        case PointOrbitLabel::RCPoint: return CosetClass::W2;
        case PointOrbitLabel::TOPoint: return CosetClass::W3a;
        case PointOrbitLabel::AxisPoint:
        case PointOrbitLabel::ICPoint: return CosetClass::W3b;
        default: break;
        }
    }
    raise(Errc::InternalInvariant,
          std::string("orbit ") + cubic::label_name(label) + " has no class at this residue");
}

std::vector<PointOrbitLabel> orbits_for_class(CosetClass cls, int xi) {
    std::vector<PointOrbitLabel> out;
    std::vector<PointOrbitLabel> all;
    if (xi == 0)
        all = {PointOrbitLabel::CubicPoint, PointOrbitLabel::AxisPoint, PointOrbitLabel::TOPoint,
               PointOrbitLabel::RCPoint, PointOrbitLabel::ICPoint};
    else
        all = {PointOrbitLabel::CubicPoint, PointOrbitLabel::TPoint, PointOrbitLabel::ThreeGamma,
               PointOrbitLabel::OneGamma, PointOrbitLabel::ZeroGamma};
    for (PointOrbitLabel label : all)
        if (class_for_orbit(label, xi) == cls) out.push_back(label);
    return out;
}

namespace {

long long exact_ll(long long num, long long den) {
    invariant(num % den == 0, "closed form requires exact division");
    return num / den;
}

void check_class(CosetClass cls, int q) {
    if (!class_valid(cls, cubic::centered_residue(q)))
        raise(Errc::ClassResidueMismatch,
              class_label(cls) + " does not exist for q = " + std::to_string(q));
}

} // namespace

long long b3_closed_form(CosetClass cls, int q) {
    check_class(cls, q);
    long long qq = q;
    int xi = cubic::centered_residue(q);
    switch (cls) {
    case CosetClass::Code:
    case CosetClass::W1: return 0;
    case CosetClass::W2a: return exact_ll(qq * qq - 5 * qq + 4, 6);
    case CosetClass::W2b: return exact_ll(qq * qq - 5 * qq + 10, 6);
    case CosetClass::W2: return exact_ll(qq * qq - 5 * qq + 6, 6);
    case CosetClass::W3a:
        return xi == 0 ? exact_ll(qq * qq - 3 * qq, 6) : exact_ll(qq * qq - 3 * qq + 2, 6);
    case CosetClass::W3b:
        return xi == -1 ? exact_ll(qq * qq - qq - 2, 6) : exact_ll(qq * qq - qq, 6);
    case CosetClass::W3c: return exact_ll(qq * qq - qq + 4, 6);
    }
    return 0;
}

Int coset_count_closed_form(CosetClass cls, int q) {
    check_class(cls, q);
    int xi = cubic::centered_residue(q);
    Int qq = q;
    Int cube = qq * qq * qq - qq;
    Int qm1 = qq - 1;
    switch (cls) {
    case CosetClass::Code: return 1;
    case CosetClass::W1: return (qq + 1) * qm1;
    case CosetClass::W2: return exact_div(cube * qm1, 2);
    case CosetClass::W2a: return exact_div(cube * qm1, 3);
    case CosetClass::W2b: return exact_div(cube * qm1, 6);
    case CosetClass::W3a:
        return xi == 0 ? Int((qq * qq - 1) * qm1) : Int((qq * qq + qq) * qm1);
    case CosetClass::W3b:
        if (xi == 1) return exact_div(cube * qm1, 2);
        if (xi == -1) return exact_div(cube * qm1, 3);
        return exact_div((qq + 1) * (qq * qq - qq + 2) * qm1, 2);
    case CosetClass::W3c: return exact_div(cube * qm1, 6);
    }
    return 0;
}

std::vector<std::pair<CosetClass, Int>> classification_counts(const CodeParameters& cp) {
    std::vector<std::pair<CosetClass, Int>> out;
    for (CosetClass cls : classes_for(cp.xi))
        out.emplace_back(cls, coset_count_closed_form(cls, cp.q));
    Int total = 0;
    for (const auto& [cls, count] : out) total += count;
    invariant(total == ipow(static_cast<unsigned long>(cp.q), 4),
              "coset counts must exhaust the q^4 syndromes");
    return out;
}

// --- weight distributions ------------------------------------------------------

Int mds_weight_count(const CodeParameters& cp, int w) {
    if (w == 0) return 1;
    if (w < cp.d) return 0;
    Int acc = 0;
    for (int j = 0; j <= w - cp.d; ++j) {
        Int term = binom(static_cast<unsigned long>(w), static_cast<unsigned long>(j)) *
                   (ipow(static_cast<unsigned long>(cp.q),
                         static_cast<unsigned long>(w - cp.d + 1 - j)) -
                    1);
        acc += (j % 2 == 0) ? term : -term;
    }
    return binom(static_cast<unsigned long>(cp.n), static_cast<unsigned long>(w)) * acc;
}

namespace {

Int coset_size(const CodeParameters& cp) {
    return ipow(static_cast<unsigned long>(cp.q), static_cast<unsigned long>(cp.k));
}

void check_mass(const CodeParameters& cp, const WeightDistribution& b) {
    invariant(sum(b) == coset_size(cp), "distribution must sum to the coset size");
    for (const Int& v : b) invariant(v >= 0, "negative weight count");
}

int sign_of(int w) { return w % 2 == 0 ? 1 : -1; }

} // namespace

WeightDistribution mds_code_distribution(const CodeParameters& cp) {
    WeightDistribution b(static_cast<std::size_t>(cp.n) + 1, Int(0));
    for (int w = 0; w <= cp.n; ++w) b[static_cast<std::size_t>(w)] = mds_weight_count(cp, w);
    check_mass(cp, b);
    return b;
}

WeightDistribution wd_weight1(const CodeParameters& cp) {
    const int q = cp.q;
    WeightDistribution b(static_cast<std::size_t>(cp.n) + 1, Int(0));
    b[1] = 1;
    b[4] = binom(static_cast<unsigned long>(q), 4);
    for (int w = 5; w <= cp.n; ++w) {
        Int corr = binom(static_cast<unsigned long>(q + 1), static_cast<unsigned long>(w)) *
                       binom(static_cast<unsigned long>(w - 1), 3) -
                   binom(static_cast<unsigned long>(q), static_cast<unsigned long>(w - 1)) *
                       binom(static_cast<unsigned long>(w - 2), 2);
        b[static_cast<std::size_t>(w)] = mds_weight_count(cp, w) + sign_of(w) * corr;
    }
    check_mass(cp, b);
    return b;
}

namespace {

std::vector<long long> legal_b3_weight2(int q) {
    long long qq = q;
    if (cubic::centered_residue(q) == 1)
        return {exact_ll(qq * qq - 5 * qq + 4, 6), exact_ll(qq * qq - 5 * qq + 10, 6)};
    return {exact_ll(qq * qq - 5 * qq + 6, 6)};
}

std::vector<long long> legal_b3_weight3(int q) {
    long long qq = q;
    switch (cubic::centered_residue(q)) {
    case 1: return {exact_ll(qq * qq - 3 * qq + 2, 6), exact_ll(qq * qq - qq, 6)};
    case -1:
        return {exact_ll(qq * qq - 3 * qq + 2, 6), exact_ll(qq * qq - qq - 2, 6),
                exact_ll(qq * qq - qq + 4, 6)};
    default: return {exact_ll(qq * qq - 3 * qq, 6), exact_ll(qq * qq - qq, 6)};
    }
}

void require_legal(const std::vector<long long>& legal, long long b3, int q, int weight) {
    if (std::find(legal.begin(), legal.end(), b3) == legal.end())
        raise(Errc::IllegalB3, "B3 = " + std::to_string(b3) + " is not admissible for a weight " +
                                   std::to_string(weight) + " coset at q = " + std::to_string(q));
}

} // namespace

WeightDistribution wd_weight2(const CodeParameters& cp, long long b3) {
    require_legal(legal_b3_weight2(cp.q), b3, cp.q, 2);
    const int q = cp.q;
    const Int b3i(static_cast<long>(b3));
    WeightDistribution b(static_cast<std::size_t>(cp.n) + 1, Int(0));
    b[2] = 1;
    b[3] = b3i;
    b[4] = binom(static_cast<unsigned long>(q + 1), 4) -
           binom(static_cast<unsigned long>(q - 1), 2) - Int(q - 2) * b3i;
    for (int w = 5; w <= cp.n; ++w) {
        Int corr = binom(static_cast<unsigned long>(q + 1), static_cast<unsigned long>(w)) *
                       binom(static_cast<unsigned long>(w - 1), 3) -
                   Int(w - 3) * binom(static_cast<unsigned long>(q - 1),
                                      static_cast<unsigned long>(w - 2)) -
                   binom(static_cast<unsigned long>(q - 2), static_cast<unsigned long>(w - 3)) *
                       b3i;
        b[static_cast<std::size_t>(w)] = mds_weight_count(cp, w) + sign_of(w) * corr;
    }
    check_mass(cp, b);
    return b;
}

WeightDistribution wd_weight3(const CodeParameters& cp, long long b3) {
    require_legal(legal_b3_weight3(cp.q), b3, cp.q, 3);
    const int q = cp.q;
    const Int b3i(static_cast<long>(b3));
    WeightDistribution b(static_cast<std::size_t>(cp.n) + 1, Int(0));
    b[3] = b3i;
    b[4] = binom(static_cast<unsigned long>(q + 1), 4) - Int(q - 2) * b3i;
    for (int w = 5; w <= cp.n; ++w) {
        Int corr = binom(static_cast<unsigned long>(q + 1), static_cast<unsigned long>(w)) *
                       binom(static_cast<unsigned long>(w - 1), 3) -
                   binom(static_cast<unsigned long>(q - 2), static_cast<unsigned long>(w - 3)) *
                       b3i;
        b[static_cast<std::size_t>(w)] = mds_weight_count(cp, w) + sign_of(w) * corr;
    }
    check_mass(cp, b);
    return b;
}

WeightDistribution bonneau_complete(int n, int d, int q, const std::vector<Int>& low) {
    invariant(static_cast<int>(low.size()) == d - 1, "need B_0..B_{d-2}");
    WeightDistribution b(static_cast<std::size_t>(n) + 1, Int(0));
    for (int v = 0; v <= d - 2; ++v) b[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)];

    for (int w = d - 1; w <= n; ++w) {
        Int head = 0;
        for (int j = 0; j <= w - d + 1; ++j) {
            Int term = binom(static_cast<unsigned long>(w), static_cast<unsigned long>(j)) *
                       ipow(static_cast<unsigned long>(q),
                            static_cast<unsigned long>(w - d + 1 - j));
            head += (j % 2 == 0) ? term : -term;
        }
        head *= binom(static_cast<unsigned long>(n), static_cast<unsigned long>(w));

        Int tail = 0;
        for (int j = w - d + 2; j <= w; ++j) {
            Int inner = 0;
            for (int v = 0; v <= w - j; ++v) {
                inner += binom(static_cast<unsigned long>(j + n - w),
                               static_cast<unsigned long>(j)) *
                         binom(static_cast<unsigned long>(n - v),
                               static_cast<unsigned long>(w - j - v)) *
                         b[static_cast<std::size_t>(v)];
            }
            tail += (j % 2 == 0) ? inner : -inner;
        }
        b[static_cast<std::size_t>(w)] = head + tail;
    }
    return b;
}

WeightDistribution class_distribution(const CodeParameters& cp, CosetClass cls) {
    check_class(cls, cp.q);
    long long b3 = b3_closed_form(cls, cp.q);
    WeightDistribution direct;
    std::vector<Int> low(4, Int(0));
    switch (leader_weight(cls)) {
    case 0:
        direct = mds_code_distribution(cp);
        low[0] = 1;
        break;
    case 1:
        direct = wd_weight1(cp);
        low[1] = 1;
        break;
    case 2:
        direct = wd_weight2(cp, b3);
        low[2] = 1;
        low[3] = static_cast<long>(b3);
        break;
    default:
        direct = wd_weight3(cp, b3);
        low[3] = static_cast<long>(b3);
        break;
    }
    WeightDistribution completed = bonneau_complete(cp.n, cp.d, cp.q, low);
    invariant(direct == completed,
              "closed form and completion disagree for " + class_label(cls) + " at q = " +
                  std::to_string(cp.q));
    return direct;
}

// --- the concrete code ---------------------------------------------------------

Code::Code(const cubic::GeometryContext& geo)
    : geo_(&geo), params_(CodeParameters::for_q(geo.q())), h_(4, static_cast<std::size_t>(geo.q()) + 1, geo.field().zero()) {
    const auto& pts = geo.cubic().points;
    for (std::size_t col = 0; col < pts.size(); ++col)
        for (std::size_t row = 0; row < 4; ++row) h_(row, col) = pts[col].x[row];

    // Arc property in matrix form: every 4 columns independent. Exhaustive for
    // small q, seeded random quadruples above.
    auto check_quad = [&](std::array<std::size_t, 4> cols) {
        gf::Matrix m(4, 4, geo.field().zero());
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = h_(r, cols[c]);
        if (gf::rank(m) != 4)
            raise(Errc::SingularQuadruple, "four dependent parity-check columns");
    };
    std::size_t n = static_cast<std::size_t>(params_.n);
    if (params_.q <= 9) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) check_quad({a, b, c, d});
    } else {
        std::mt19937 rng(0xC05E7u);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int checked = 0; checked < 1000;) {
            std::array<std::size_t, 4> cols;
            for (auto& c : cols) c = pick(rng);
            std::sort(cols.begin(), cols.end());
            if (cols[0] == cols[1] || cols[1] == cols[2] || cols[2] == cols[3]) continue;
            check_quad(cols);
            ++checked;
        }
    }
}

std::vector<Fe> Code::syndrome(std::span<const Fe> x) const {
    if (static_cast<int>(x.size()) != params_.n)
        raise(Errc::LengthMismatch, "vector length must be q+1 = " + std::to_string(params_.n));
    return gf::mat_vec(h_, x);
}

Code::Classified Code::classify_syndrome(const std::array<Fe, 4>& s) const {
    bool zero = true;
    for (const Fe& e : s) zero = zero && e.is_zero();
    if (zero) return {CosetClass::Code, 0};
    geom::Point p = geom::make_point(s);
    CosetClass cls = class_for_orbit(geo_->classify_point(p), params_.xi);
    return {cls, leader_weight(cls)};
}

std::pair<CosetClass, WeightDistribution>
Code::coset_distribution(const std::array<Fe, 4>& s) const {
    CosetClass cls = classify_syndrome(s).cls;
    return {cls, class_distribution(params_, cls)};
}

std::size_t Code::syndrome_rank(const std::array<Fe, 4>& s) const {
    std::size_t q = static_cast<std::size_t>(params_.q);
    std::size_t rank = 0;
    for (const Fe& e : s) rank = rank * q + static_cast<std::size_t>(e.index());
    return rank;
}

std::array<Fe, 4> Code::syndrome_from_rank(std::size_t rank) const {
    const Field& f = geo_->field();
    std::size_t q = static_cast<std::size_t>(params_.q);
    std::array<Fe, 4> s{f.zero(), f.zero(), f.zero(), f.zero()};
    for (int i = 3; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = f.element(static_cast<int>(rank % q));
        rank /= q;
    }
    return s;
}

DualWeightSet dual_weight_set(const Code& code) {
    const Field& f = code.geometry().field();
    const gf::Matrix& h = code.parity_check();
    int q = code.params().q;
    int n = code.params().n;

    DualWeightSet out;
    out.min_weight = n + 1;
    std::vector<Fe> word(static_cast<std::size_t>(n), f.zero());
    std::array<int, 4> coef{0, 0, 0, 0};
    while (true) {
        // advance odometer
        int pos = 3;
        while (pos >= 0 && coef[static_cast<std::size_t>(pos)] == q - 1) {
            coef[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++coef[static_cast<std::size_t>(pos)];

        for (int c = 0; c < n; ++c) {
            Fe acc = f.zero();
            for (int r = 0; r < 4; ++r)
                acc = acc + f.element(coef[static_cast<std::size_t>(r)]) *
                                h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            word[static_cast<std::size_t>(c)] = acc;
        }
        int weight = 0;
        for (const Fe& e : word)
            if (!e.is_zero()) ++weight;
        invariant(weight > 0, "nonzero dual combination with zero weight");
        out.weights.insert(weight);
        out.min_weight = std::min(out.min_weight, weight);
    }
    out.count = static_cast<int>(out.weights.size());
    invariant(out.count == 4, "the dual code has four nonzero weights");
    invariant(out.min_weight == q - 2, "the dual code has minimum distance q-2");
    return out;
}

// --- distribution laws -----------------------------------------------------------

std::vector<std::vector<CosetClass>> law_families(int xi) {
    if (xi == 1)
        return {{CosetClass::W2a, CosetClass::W2b}, {CosetClass::W3a, CosetClass::W3b}};
    if (xi == -1) return {{CosetClass::W3a, CosetClass::W3b, CosetClass::W3c}};
    return {{CosetClass::W3a, CosetClass::W3b}};
}

DifferenceReport difference_law_check(const CodeParameters& cp) {
    DifferenceReport report;
    for (const auto& family : law_families(cp.xi)) {
        std::vector<WeightDistribution> dists;
        for (CosetClass cls : family) dists.push_back(class_distribution(cp, cls));
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                Int db3 = Int(static_cast<long>(b3_closed_form(family[i], cp.q))) -
                          Int(static_cast<long>(b3_closed_form(family[j], cp.q)));
                for (int w = 3; w <= cp.n; ++w) {
                    Int lhs = dists[i][static_cast<std::size_t>(w)] -
                              dists[j][static_cast<std::size_t>(w)];
                    Int rhs = -Int(sign_of(w)) * db3 *
                              binom(static_cast<unsigned long>(cp.q - 2),
                                    static_cast<unsigned long>(w - 3));
                    if (lhs != rhs)
                        raise(Errc::LawViolation,
                              "difference law fails at q = " + std::to_string(cp.q) + ", (" +
                                  class_label(family[i]) + ", " + class_label(family[j]) +
                                  "), w = " + std::to_string(w) + ": " + dec(lhs) +
                                  " != " + dec(rhs));
                    report.entries.push_back({family[i], family[j], w, lhs, rhs});
                }
            }
        }
    }
    return report;
}

const Int& SymmetryReport::constant_for(int family_weight, int w) const {
    for (const auto& e : entries)
        if (e.family_weight == family_weight && e.w == w) return e.constant;
    raise(Errc::InternalInvariant, "no symmetry entry for the requested family");
}

SymmetryReport symmetry_check(const CodeParameters& cp) {
    SymmetryReport report;
    int q = cp.q;
    int q_sign = q % 2 == 0 ? 1 : -1;
    for (const auto& family : law_families(cp.xi)) {
        std::vector<WeightDistribution> dists;
        for (CosetClass cls : family) dists.push_back(class_distribution(cp, cls));
        int fam_w = leader_weight(family.front());
        for (int w = 3; w <= (q + 3) / 2; ++w) {
            Int constant;
            for (std::size_t m = 0; m < family.size(); ++m) {
                Int value = dists[m][static_cast<std::size_t>(q + 4 - w)] -
                            Int(q_sign) * dists[m][static_cast<std::size_t>(w)];
                if (m == 0) {
                    constant = value;
                } else if (value != constant) {
                    raise(Errc::LawViolation,
                          "symmetry fails at q = " + std::to_string(q) + ", family W = " +
                              std::to_string(fam_w) + ", w = " + std::to_string(w) + ": " +
                              dec(value) + " != " + dec(constant));
                }
            }
            report.entries.push_back({fam_w, w, constant});
        }
    }
    return report;
}

} // namespace coset_atlas::code

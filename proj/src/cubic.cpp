#include "coset_atlas/cubic.hpp"

#include "coset_atlas/errors.hpp"
#include "coset_atlas/parallel.hpp"

#include <algorithm>

namespace coset_atlas::cubic {

int orbit_number(PointOrbitLabel label) {
    switch (label) {
    case PointOrbitLabel::CubicPoint: return 1;
    case PointOrbitLabel::TPoint:
    case PointOrbitLabel::AxisPoint: return 2;
    case PointOrbitLabel::ThreeGamma:
    case PointOrbitLabel::TOPoint: return 3;
    case PointOrbitLabel::OneGamma:
    case PointOrbitLabel::RCPoint: return 4;
    case PointOrbitLabel::ZeroGamma:
    case PointOrbitLabel::ICPoint: return 5;
    }
    return 0;
}

int orbit_number(PlaneOrbitLabel label) {
    switch (label) {
    case PlaneOrbitLabel::GammaPlane: return 1;
    case PlaneOrbitLabel::TwoCPlane: return 2;
    case PlaneOrbitLabel::ThreeCPlane: return 3;
    case PlaneOrbitLabel::OneCNotGamma: return 4;
    case PlaneOrbitLabel::ZeroCPlane: return 5;
    }
    return 0;
}

const char* label_name(PointOrbitLabel label) {
    switch (label) {
    case PointOrbitLabel::CubicPoint: return "cubic-point";
    case PointOrbitLabel::TPoint: return "T-point";
    case PointOrbitLabel::ThreeGamma: return "3G-point";
    case PointOrbitLabel::OneGamma: return "1G-point";
    case PointOrbitLabel::ZeroGamma: return "0G-point";
    case PointOrbitLabel::AxisPoint: return "axis-point";
    case PointOrbitLabel::TOPoint: return "TO-point";
    case PointOrbitLabel::RCPoint: return "RC-point";
    case PointOrbitLabel::ICPoint: return "IC-point";
    }
    return "?";
}

const char* label_name(PlaneOrbitLabel label) {
    switch (label) {
    case PlaneOrbitLabel::GammaPlane: return "G-plane";
    case PlaneOrbitLabel::TwoCPlane: return "2C-plane";
    case PlaneOrbitLabel::ThreeCPlane: return "3C-plane";
    case PlaneOrbitLabel::OneCNotGamma: return "1C-plane";
    case PlaneOrbitLabel::ZeroCPlane: return "0C-plane";
    }
    return "?";
}

int centered_residue(int q) {
    int r = q % 3;
    return r == 2 ? -1 : r;
}

std::array<long long, 5> orbit_sizes_closed_form(int xi, int q) {
    long long qq = q;
    long long cube = qq * qq * qq - qq; // q^3 - q
    if (xi == 0) {
        invariant(cube % 2 == 0, "orbit size division");
        return {qq + 1, qq + 1, qq * qq - 1, cube / 2, cube / 2};
    }
    invariant(cube % 6 == 0, "orbit size division");
    return {qq + 1, qq * (qq + 1), cube / 6, cube / 2, cube / 3};
}

long long r_closed_form(int j, int xi, int q) {
    if (centered_residue(q) != xi)
        raise(Errc::InvalidResidue,
              "q = " + std::to_string(q) + " is not congruent to " + std::to_string(xi) +
                  " mod 3");
    invariant(j >= 1 && j <= 5, "orbit index out of range");
    long long qq = q;
    auto exact = [](long long num, long long den) {
        invariant(num % den == 0, "incidence closed form not divisible");
        return num / den;
    };
    if (xi == 1) {
        switch (j) {
        case 1: return exact(qq * qq - qq, 2);
        case 2: return exact(qq * qq - 3 * qq + 2, 6);
        case 3: return exact(qq * qq + qq + 4, 6);
        case 4: return exact(qq * qq - qq, 6);
        case 5: return exact(qq * qq + qq - 2, 6);
        }
    } else if (xi == -1) {
        switch (j) {
        case 1: return exact(qq * qq - qq, 2);
        case 2: return exact(qq * qq - 3 * qq + 2, 6);
        case 3: return exact(qq * qq - qq + 4, 6);
        case 4: return exact(qq * qq + qq, 6);
        case 5: return exact(qq * qq - qq - 2, 6);
        }
    } else {
        switch (j) {
        case 1: return exact(qq * qq - qq, 2);
        case 2: return exact(qq * qq - qq, 6);
        case 3: return exact(qq * qq - 3 * qq, 6);
        case 4: return exact(qq * qq + qq, 6);
        case 5: return exact(qq * qq - qq, 6);
        }
    }
    return 0;
}

std::optional<int> TwistedCubic::parameter_of(const Point& p) const {
    int t = param_by_point_index[geom::point_index(p)];
    if (t < 0) return std::nullopt;
    return t;
}

TwistedCubic build_cubic(const Field& f) {
    TwistedCubic c;
    int q = f.order();
    c.points.reserve(static_cast<std::size_t>(q) + 1);
    for (Fe t : f.all_elements()) {
        Fe t2 = t * t;
        c.points.push_back(Point{{f.one(), t, t2, t2 * t}});
    }
    c.points.push_back(Point{{f.zero(), f.zero(), f.zero(), f.one()}});

    c.param_by_point_index.assign(geom::space_size(f), -1);
    for (int t = 0; t <= q; ++t) {
        std::size_t idx = geom::point_index(c.points[static_cast<std::size_t>(t)]);
        invariant(c.param_by_point_index[idx] == -1, "cubic points must be distinct");
        c.param_by_point_index[idx] = t;
    }
    return c;
}

OsculatingDevelopable osculating_developable(const Field& f, const TwistedCubic& c) {
    OsculatingDevelopable dev;
    int q = f.order();
    Fe three = f.from_int(3);
    for (Fe t : f.all_elements()) {
        Fe t2 = t * t;
        Fe t3 = t2 * t;
        dev.planes.push_back(geom::make_plane({-t3, three * t2, -(three * t), f.one()}));
    }
    // The limit of (-t^3 : 3t^2 : -3t : 1) as t grows is (1 : 0 : 0 : 0).
    dev.planes.push_back(Plane{{f.one(), f.zero(), f.zero(), f.zero()}});

    for (int t = 0; t <= q; ++t)
        invariant(geom::incident(c.points[static_cast<std::size_t>(t)],
                                 dev.planes[static_cast<std::size_t>(t)]),
                  "cubic point must lie on its osculating plane");
    return dev;
}

GeometryContext GeometryContext::build(std::unique_ptr<Field> field, int jobs) {
    GeometryContext ctx;
    ctx.field_ = std::move(field);
    ctx.build_impl(jobs);
    return ctx;
}

GeometryContext GeometryContext::for_order(int q, int jobs) {
    auto [p, m] = gf::factor_prime_power(q);
    return build(std::make_unique<Field>(Field::build(p, m)), jobs);
}

GeometryContext GeometryContext::for_field_spec(const std::string& spec, int jobs) {
    return build(std::make_unique<Field>(gf::parse_field_spec(spec)), jobs);
}

void GeometryContext::build_impl(int jobs) {
    const Field& f = *field_;
    int q = f.order();
    xi_ = centered_residue(q);
    std::size_t space = geom::space_size(f);

    points_ = geom::enumerate_points(f);
    planes_ = geom::enumerate_planes(f);
    cubic_ = build_cubic(f);
    developable_ = osculating_developable(f, cubic_);

    // --- plane orbits --------------------------------------------------------
    std::vector<bool> is_gamma(space, false);
    for (const Plane& pi : developable_.planes) {
        std::size_t idx = geom::plane_index(pi);
        invariant(!is_gamma[idx], "osculating planes must be distinct");
        is_gamma[idx] = true;
    }

    plane_labels_.resize(space);
    for (std::size_t i = 0; i < space; ++i) {
        int on_cubic = 0;
        for (const Point& p : cubic_.points)
            if (geom::incident(p, planes_[i])) ++on_cubic;
        invariant(on_cubic <= 3, "no plane may contain four cubic points");
        if (on_cubic == 3) {
            plane_labels_[i] = PlaneOrbitLabel::ThreeCPlane;
            n3_planes_.push_back(i);
        } else if (on_cubic == 2) {
            plane_labels_[i] = PlaneOrbitLabel::TwoCPlane;
        } else if (on_cubic == 1) {
            plane_labels_[i] = is_gamma[i] ? PlaneOrbitLabel::GammaPlane
                                           : PlaneOrbitLabel::OneCNotGamma;
        } else {
            invariant(!is_gamma[i], "an osculating plane must contain its cubic point");
            plane_labels_[i] = PlaneOrbitLabel::ZeroCPlane;
        }
    }
    for (const Plane& pi : developable_.planes)
        invariant(plane_labels_[geom::plane_index(pi)] == PlaneOrbitLabel::GammaPlane,
                  "each osculating plane meets the cubic exactly once");

    // --- pencil axis (q divisible by 3) --------------------------------------
    if (xi_ == 0) {
        gf::Matrix m(developable_.planes.size(), 4, f.zero());
        for (std::size_t r = 0; r < developable_.planes.size(); ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = developable_.planes[r].c[c];
        auto basis = gf::null_space(m);
        invariant(basis.size() == 2, "osculating planes must share a line");
        Point a = geom::make_point({basis[0][0], basis[0][1], basis[0][2], basis[0][3]});
        Point b = geom::make_point({basis[1][0], basis[1][1], basis[1][2], basis[1][3]});
        axis_ = Line::through(a, b);
    }

    // --- tangent lines --------------------------------------------------------
    Fe two = f.from_int(2);
    Fe three = f.from_int(3);
    auto elems = f.all_elements();
    for (int t = 0; t <= q; ++t) {
        Point direction =
            t < q ? geom::make_point({f.zero(), f.one(), two * elems[static_cast<std::size_t>(t)],
                                      three * elems[static_cast<std::size_t>(t)] *
                                          elems[static_cast<std::size_t>(t)]})
                  : Point{{f.zero(), f.zero(), f.one(), f.zero()}};
        const Point& contact = cubic_.points[static_cast<std::size_t>(t)];
        Line tangent = Line::through(contact, direction);

        const Plane& osc = developable_.planes[static_cast<std::size_t>(t)];
        invariant(geom::incident(tangent.first(), osc) && geom::incident(tangent.second(), osc),
                  "tangent must lie in the osculating plane");
        int hits = 0;
        for (const Point& p : tangent.points()) {
            if (!cubic_.contains(p)) continue;
            ++hits;
            invariant(p == contact, "tangent meets the cubic only at its contact point");
        }
        invariant(hits == 1, "tangent meets the cubic exactly once");
        tangents_.push_back(tangent);
    }

    // --- chords: every off-cubic point lies on exactly one -------------------
    chord_by_point_.assign(space, ChordClass{});
    std::vector<bool> chord_seen(space, false);
    auto mark = [&](const Line& line, const ChordClass& chord) {
        for (const Point& p : line.points()) {
            std::size_t idx = geom::point_index(p);
            if (cubic_.param_by_point_index[idx] >= 0) continue;
            invariant(!chord_seen[idx], "no two chords may meet off the cubic");
            chord_seen[idx] = true;
            chord_by_point_[idx] = chord;
        }
    };
    for (int i = 0; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            mark(Line::through(cubic_.points[static_cast<std::size_t>(i)],
                               cubic_.points[static_cast<std::size_t>(j)]),
                 ChordClass{ChordClass::Kind::Real, i, j});
    for (int t = 0; t <= q; ++t)
        mark(tangents_[static_cast<std::size_t>(t)], ChordClass{ChordClass::Kind::Tangent, t, -1});

    // --- per-point incidence sweeps (partitioned across workers) -------------
    mu_by_point_.assign(space, 0);
    three_planes_by_point_.assign(space, 0);
    struct NoState {};
    parallel_chunks<NoState>(
        space, jobs,
        [&](std::size_t lo, std::size_t hi, NoState&) {
            for (std::size_t i = lo; i < hi; ++i) {
                int mu = 0;
                for (const Plane& pi : developable_.planes)
                    if (geom::incident(points_[i], pi)) ++mu;
                mu_by_point_[i] = mu;
                long long n3 = 0;
                for (std::size_t pidx : n3_planes_)
                    if (geom::incident(points_[i], planes_[pidx])) ++n3;
                three_planes_by_point_[i] = n3;
            }
        },
        [](NoState&) {});

    // --- point orbits ---------------------------------------------------------
    point_labels_.resize(space);
    std::vector<bool> on_axis(space, false);
    if (axis_) {
        for (const Point& p : axis_->points()) on_axis[geom::point_index(p)] = true;
    }
    for (std::size_t i = 0; i < space; ++i) {
        if (cubic_.param_by_point_index[i] >= 0) {
            point_labels_[i] = PointOrbitLabel::CubicPoint;
            continue;
        }
        const ChordClass& chord = chord_by_point_[i];
        int mu = mu_by_point_[i];
        if (xi_ != 0) {
            if (chord.kind == ChordClass::Kind::Tangent) {
                point_labels_[i] = PointOrbitLabel::TPoint;
                continue;
            }
            switch (mu) {
            case 3: point_labels_[i] = PointOrbitLabel::ThreeGamma; break;
            case 1: point_labels_[i] = PointOrbitLabel::OneGamma; break;
            case 0: point_labels_[i] = PointOrbitLabel::ZeroGamma; break;
            default: raise(Errc::InternalInvariant, "off-tangent point with mu not in {0,1,3}");
            }
            // Chord/orbit correspondence: for q = 1 mod 3 the mu in {0,3}
            // orbits lie on real chords and mu = 1 on imaginary; reversed for
            // q = -1 mod 3.
            ChordClass::Kind expect =
                ((xi_ == 1) == (mu != 1)) ? ChordClass::Kind::Real : ChordClass::Kind::Imaginary;
            invariant(chord.kind == expect, "chord kind inconsistent with orbit");
        } else {
            if (mu == q + 1) {
                invariant(on_axis[i], "only axis points lie on every osculating plane");
                invariant(chord.kind == ChordClass::Kind::Tangent,
                          "axis points lie on exactly one tangent");
                point_labels_[i] = PointOrbitLabel::AxisPoint;
            } else if (chord.kind == ChordClass::Kind::Tangent) {
                invariant(mu == 1, "TO-points lie on exactly one osculating plane");
                point_labels_[i] = PointOrbitLabel::TOPoint;
            } else if (chord.kind == ChordClass::Kind::Real) {
                point_labels_[i] = PointOrbitLabel::RCPoint;
            } else {
                point_labels_[i] = PointOrbitLabel::ICPoint;
            }
        }
    }
    if (axis_) {
        std::size_t axis_count = 0;
        for (std::size_t i = 0; i < space; ++i)
            if (point_labels_[i] == PointOrbitLabel::AxisPoint) ++axis_count;
        invariant(axis_count == static_cast<std::size_t>(q) + 1,
                  "the axis carries q+1 pencil points");
    }
}

namespace {

std::size_t own_index(const Field& f, const std::array<Fe, 4>& coords) {
    if (&coords[0].field() != &f)
        raise(Errc::MixedFields, "coordinates belong to a different field");
    return geom::point_index(Point{coords});
}

} // namespace

PlaneOrbitLabel GeometryContext::classify_plane(const Plane& pi) const {
    return plane_labels_[own_index(*field_, pi.c)];
}

PointOrbitLabel GeometryContext::classify_point(const Point& p) const {
    return point_labels_[own_index(*field_, p.x)];
}

ChordClass GeometryContext::chord_through(const Point& p) const {
    std::size_t idx = own_index(*field_, p.x);
    if (cubic_.param_by_point_index[idx] >= 0)
        raise(Errc::PointOnCubic, "chord classification is defined off the cubic");
    return chord_by_point_[idx];
}

int GeometryContext::osculating_count(const Point& p) const {
    return mu_by_point_[own_index(*field_, p.x)];
}

long long GeometryContext::three_plane_count(const Point& p) const {
    return three_planes_by_point_[own_index(*field_, p.x)];
}

std::array<std::size_t, 5> GeometryContext::point_orbit_census() const {
    std::array<std::size_t, 5> census{};
    for (PointOrbitLabel label : point_labels_)
        ++census[static_cast<std::size_t>(orbit_number(label)) - 1];
    return census;
}

std::array<std::size_t, 5> GeometryContext::plane_orbit_census() const {
    std::array<std::size_t, 5> census{};
    for (PlaneOrbitLabel label : plane_labels_)
        ++census[static_cast<std::size_t>(orbit_number(label)) - 1];
    return census;
}

std::pair<int, int> GeometryContext::chord_plane_counts(const ChordClass& chord) const {
    invariant(chord.kind == ChordClass::Kind::Real, "plane counts are defined for real chords");
    const Point& a = cubic_.points[static_cast<std::size_t>(chord.t1)];
    const Point& b = cubic_.points[static_cast<std::size_t>(chord.t2)];
    int q = field_->order();
    int three_c = 0;
    int two_c = 0;
    int total = 0;
    for (std::size_t i = 0; i < planes_.size(); ++i) {
        if (!geom::incident(a, planes_[i]) || !geom::incident(b, planes_[i])) continue;
        ++total;
        if (plane_labels_[i] == PlaneOrbitLabel::ThreeCPlane) ++three_c;
        else if (plane_labels_[i] == PlaneOrbitLabel::TwoCPlane) ++two_c;
    }
    invariant(total == q + 1, "a line lies on q+1 planes");
    invariant(three_c == q - 1 && two_c == 2,
              "a real chord lies on q-1 3-point planes and 2 2-point planes");
    return {three_c, two_c};
}

} // namespace coset_atlas::cubic

#include "coset_atlas/geom.hpp"

#include "coset_atlas/errors.hpp"

namespace coset_atlas::geom {

std::array<Fe, 4> normalize(std::array<Fe, 4> v) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (v[i].is_zero()) continue;
        Fe scale = v[i].inverse();
        for (std::size_t j = i; j < 4; ++j) v[j] = v[j] * scale;
        return v;
    }
    raise(Errc::ZeroVector, "all four coordinates are zero");
}

bool incident(const Point& p, const Plane& pi) {
    Fe acc = p.x[0] * pi.c[0];
    for (std::size_t i = 1; i < 4; ++i) acc = acc + p.x[i] * pi.c[i];
    return acc.is_zero();
}

Plane plane_through(const Point& a, const Point& b, const Point& c) {
    const Field& f = a.x[0].field();
    gf::Matrix m(3, 4, f.zero());
    for (std::size_t j = 0; j < 4; ++j) {
        m(0, j) = a.x[j];
        m(1, j) = b.x[j];
        m(2, j) = c.x[j];
    }
    auto basis = gf::null_space(m);
    if (basis.size() != 1)
        raise(Errc::CollinearPoints, "points do not span a unique plane");
    return make_plane({basis[0][0], basis[0][1], basis[0][2], basis[0][3]});
}

bool point_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.x[i].index() != b.x[i].index()) return a.x[i].index() < b.x[i].index();
    }
    return false;
}

Line Line::through(const Point& a, const Point& b) {
    if (a == b) raise(Errc::EqualPoints, "a line needs two distinct points");
    // Canonical representative: the two smallest points on the line.
    Line raw(a, b);
    std::vector<Point> pts = raw.points();
    return Line(pts[0], pts[1]);
}

std::vector<Point> Line::points() const {
    const Field& f = a_.x[0].field();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(f.order()) + 1);
    out.push_back(Point{b_.x}); // lambda = 0
    for (Fe lambda : f.all_elements()) {
        std::array<Fe, 4> v;
        for (std::size_t i = 0; i < 4; ++i) v[i] = a_.x[i] + lambda * b_.x[i];
        out.push_back(make_point(v));
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::size_t space_size(const Field& f) {
    std::size_t q = static_cast<std::size_t>(f.order());
    return q * q * q + q * q + q + 1;
}

namespace {

// Normalized 4-tuples in lexicographic order: (0,0,0,1), then (0,0,1,*),
// then (0,1,*,*), then (1,*,*,*).
std::vector<std::array<Fe, 4>> enumerate_normalized(const Field& f) {
    std::vector<std::array<Fe, 4>> out;
    out.reserve(space_size(f));
    Fe zero = f.zero();
    Fe one = f.one();
    auto elems = f.all_elements();
    out.push_back({zero, zero, zero, one});
    for (Fe a : elems) out.push_back({zero, zero, one, a});
    for (Fe a : elems)
        for (Fe b : elems) out.push_back({zero, one, a, b});
    for (Fe a : elems)
        for (Fe b : elems)
            for (Fe c : elems) out.push_back({one, a, b, c});
    return out;
}

std::size_t normalized_index(const std::array<Fe, 4>& v) {
    std::size_t q = static_cast<std::size_t>(v[0].field().order());
    auto idx = [](Fe e) { return static_cast<std::size_t>(e.index()); };
    if (!v[0].is_zero()) return 1 + q + q * q + idx(v[1]) * q * q + idx(v[2]) * q + idx(v[3]);
    if (!v[1].is_zero()) return 1 + q + idx(v[2]) * q + idx(v[3]);
    if (!v[2].is_zero()) return 1 + idx(v[3]);
    return 0;
}

} // namespace

std::vector<Point> enumerate_points(const Field& f) {
    std::vector<Point> out;
    out.reserve(space_size(f));
    for (auto& v : enumerate_normalized(f)) out.push_back(Point{v});
    return out;
}

std::vector<Plane> enumerate_planes(const Field& f) {
    std::vector<Plane> out;
    out.reserve(space_size(f));
    for (auto& v : enumerate_normalized(f)) out.push_back(Plane{v});
    return out;
}

std::size_t point_index(const Point& p) { return normalized_index(p.x); }
std::size_t plane_index(const Plane& pi) { return normalized_index(pi.c); }

} // namespace coset_atlas::geom

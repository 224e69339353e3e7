#ifndef COSET_ATLAS_GEOM_HPP
#define COSET_ATLAS_GEOM_HPP

#include "coset_atlas/gf.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace coset_atlas::geom {

using gf::Fe;
using gf::Field;

//! A point of PG(3,q) in normalized homogeneous coordinates: the leftmost
//! nonzero coordinate equals 1, so equality is coordinate-wise.
struct Point {
    std::array<Fe, 4> x;

    bool operator==(const Point& o) const { return x == o.x; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

//! The plane c0*x0 + c1*x1 + c2*x2 + c3*x3 = 0, coefficients normalized the
//! same way as points.
struct Plane {
    std::array<Fe, 4> c;

    bool operator==(const Plane& o) const { return c == o.c; }
    bool operator!=(const Plane& o) const { return !(*this == o); }
};

std::array<Fe, 4> normalize(std::array<Fe, 4> v); // throws ZeroVector

inline Point make_point(std::array<Fe, 4> coords) { return Point{normalize(coords)}; }
inline Plane make_plane(std::array<Fe, 4> coeffs) { return Plane{normalize(coeffs)}; }

bool incident(const Point& p, const Plane& pi);

//! Unique plane through three non-collinear points (via the null space of the
//! 3x4 coordinate matrix). Throws CollinearPoints otherwise.
Plane plane_through(const Point& a, const Point& b, const Point& c);

// Global point order: lexicographic on normalized coordinates under the field
// element order. enumerate_points lists points exactly in this order and
// point_index inverts it in O(1).
bool point_less(const Point& a, const Point& b);

//! A line of PG(3,q), stored as its two smallest points in the global order.
//! Two lines are equal iff they contain the same point set.
class Line {
public:
    static Line through(const Point& a, const Point& b); // throws EqualPoints

    const Point& first() const { return a_; }
    const Point& second() const { return b_; }

    //! All q+1 points of the line, in global point order.
    std::vector<Point> points() const;

    bool operator==(const Line& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Line& o) const { return !(*this == o); }

private:
    Line(Point a, Point b) : a_(a), b_(b) {}
    Point a_, b_;
};

inline Line line_through(const Point& a, const Point& b) { return Line::through(a, b); }
inline std::vector<Point> points_on_line(const Line& l) { return l.points(); }

std::size_t space_size(const Field& f); // q^3 + q^2 + q + 1

std::vector<Point> enumerate_points(const Field& f);
std::vector<Plane> enumerate_planes(const Field& f);

std::size_t point_index(const Point& p);
std::size_t plane_index(const Plane& pi);

} // namespace coset_atlas::geom

#endif

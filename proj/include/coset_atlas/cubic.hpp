#ifndef COSET_ATLAS_CUBIC_HPP
#define COSET_ATLAS_CUBIC_HPP

#include "coset_atlas/geom.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coset_atlas::cubic {

using geom::Line;
using geom::Plane;
using geom::Point;
using gf::Fe;
using gf::Field;

//! Cubic parameters are indices into F_q extended by infinity: 0..q-1 select
//! the field element of that index, q stands for the point at infinity.
struct Param {
    int value;

    bool is_infinity(int q) const { return value == q; }
};

//! The chord of the cubic through an off-cubic point: a real chord through two
//! distinct cubic points, a tangent at one, or an imaginary chord (assigned by
//! exclusion; no two chords meet off the cubic, so the assignment is unique).
struct ChordClass {
    enum class Kind { Real, Tangent, Imaginary };

    Kind kind = Kind::Imaginary;
    int t1 = -1; // Real: smaller parameter; Tangent: the tangency parameter
    int t2 = -1; // Real: larger parameter

    bool operator==(const ChordClass& o) const = default;
};

enum class PointOrbitLabel : unsigned char {
    CubicPoint, // M1 for every residue
    TPoint,     // M2, q not divisible by 3
    ThreeGamma, // M3, q not divisible by 3
    OneGamma,   // M4, q not divisible by 3
    ZeroGamma,  // M5, q not divisible by 3
    AxisPoint,  // M2, q divisible by 3 (lies on all q+1 osculating planes)
    TOPoint,    // M3, q divisible by 3
    RCPoint,    // M4, q divisible by 3
    ICPoint,    // M5, q divisible by 3
};

enum class PlaneOrbitLabel : unsigned char {
    GammaPlane,   // N1
    TwoCPlane,    // N2
    ThreeCPlane,  // N3
    OneCNotGamma, // N4
    ZeroCPlane,   // N5
};

//! Orbit number j in M_j (resp. i in N_i), 1-based.
int orbit_number(PointOrbitLabel label);
int orbit_number(PlaneOrbitLabel label);
const char* label_name(PointOrbitLabel label);
const char* label_name(PlaneOrbitLabel label);

//! q mod 3 centered in {-1, 0, 1}.
int centered_residue(int q);

//! Orbit cardinalities #M_1..#M_5 in closed form.
std::array<long long, 5> orbit_sizes_closed_form(int xi, int q);

//! Number of 3-point planes through each point of orbit M_j, in closed form.
//! Throws InvalidResidue unless q is congruent to xi mod 3 (centered).
long long r_closed_form(int j, int xi, int q);

//! The twisted cubic: P(t) = (1, t, t^2, t^3) for t in canonical field order,
//! then P(infinity) = (0,0,0,1).
struct TwistedCubic {
    std::vector<Point> points; // q+1, parameter order
    std::vector<int> param_by_point_index; // space-sized, -1 off the cubic

    std::optional<int> parameter_of(const Point& p) const;
    bool contains(const Point& p) const { return parameter_of(p).has_value(); }
};

TwistedCubic build_cubic(const Field& f);

//! The osculating developable: the plane with second-order contact at each
//! cubic point. For q divisible by 3 the planes form a pencil through a
//! common axis line.
struct OsculatingDevelopable {
    std::vector<Plane> planes; // q+1, same parameter order as the cubic
};

OsculatingDevelopable osculating_developable(const Field& f, const TwistedCubic& c);

//! Everything about PG(3,q) relative to the cubic, computed once and then
//! immutable: plane orbit labels, per-point chords, osculating-plane counts,
//! point orbit labels and the 3-point-plane incidence table. All queries are
//! pure lookups and safe to run concurrently.
class GeometryContext {
public:
    static GeometryContext build(std::unique_ptr<Field> field, int jobs = 0);
    static GeometryContext for_order(int q, int jobs = 0);
    static GeometryContext for_field_spec(const std::string& spec, int jobs = 0);

    const Field& field() const { return *field_; }
    int q() const { return field_->order(); }
    int xi() const { return xi_; }

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Plane>& planes() const { return planes_; }
    const TwistedCubic& cubic() const { return cubic_; }
    const OsculatingDevelopable& developable() const { return developable_; }
    const std::vector<Line>& tangents() const { return tangents_; }
    //! The pencil axis; present exactly when q is divisible by 3.
    const std::optional<Line>& pencil_axis() const { return axis_; }

    PlaneOrbitLabel plane_label(std::size_t plane_idx) const { return plane_labels_[plane_idx]; }
    PlaneOrbitLabel classify_plane(const Plane& pi) const;
    PointOrbitLabel point_label(std::size_t point_idx) const { return point_labels_[point_idx]; }
    PointOrbitLabel classify_point(const Point& p) const;

    //! Throws PointOnCubic for cubic points.
    ChordClass chord_through(const Point& p) const;

    //! Number of osculating planes through the point (mu).
    int osculating_count(const Point& p) const;

    //! Number of 3-point planes through the point.
    long long three_plane_count(const Point& p) const;

    const std::vector<std::size_t>& three_plane_indices() const { return n3_planes_; }

    std::array<std::size_t, 5> point_orbit_census() const;
    std::array<std::size_t, 5> plane_orbit_census() const;

    //! (number of 3-point planes, number of 2-point planes) through a real
    //! chord. The values q-1 and 2 are asserted internally.
    std::pair<int, int> chord_plane_counts(const ChordClass& chord) const;

private:
    GeometryContext() = default;
    void build_impl(int jobs);

    std::unique_ptr<Field> field_;
    int xi_ = 0;
    std::vector<Point> points_;
    std::vector<Plane> planes_;
    TwistedCubic cubic_;
    OsculatingDevelopable developable_;
    std::vector<Line> tangents_;
    std::optional<Line> axis_;

    std::vector<PlaneOrbitLabel> plane_labels_;
    std::vector<PointOrbitLabel> point_labels_;
    std::vector<ChordClass> chord_by_point_;
    std::vector<int> mu_by_point_;
    std::vector<long long> three_planes_by_point_;
    std::vector<std::size_t> n3_planes_;
};

} // namespace coset_atlas::cubic

#endif

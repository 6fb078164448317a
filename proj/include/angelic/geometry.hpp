#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace angelic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kGeomEps = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Counterclockwise simple polygon without holes.
struct Polygon {
    std::vector<Vec2> pts;

    Polygon() = default;
    explicit Polygon(std::vector<Vec2> p) : pts(std::move(p)) {}

    double signed_area() const;
    bool is_convex() const;
    /// Empty string when the polygon satisfies all invariants
    /// (>= 3 finite vertices, simple, positive signed area).
    std::string validate() const;

    void aabb(Vec2& lo, Vec2& hi) const;
    Vec2 centroid() const;
};

/// Environment: outer bounds polygon minus obstacle interiors.
struct Workspace {
    Polygon bounds;
    std::vector<Polygon> obstacles;

    std::string validate() const;
    /// Closed free space: inside bounds and not strictly inside any obstacle.
    bool in_free_space(Vec2 p) const;
};

Polygon make_box(double x0, double y0, double x1, double y1);

double orient(Vec2 a, Vec2 b, Vec2 c);
bool point_on_segment(Vec2 p, Vec2 a, Vec2 b, double eps = kGeomEps);
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// Closed membership: boundary points count as inside.
bool point_in_polygon(Vec2 p, const Polygon& poly);
bool point_strictly_in_polygon(Vec2 p, const Polygon& poly);
bool point_on_polygon_boundary(Vec2 p, const Polygon& poly, double eps = kGeomEps);

/// 0 when p lies in the closed polygon, otherwise distance to the boundary.
double point_polygon_distance(Vec2 p, const Polygon& poly);

/// True iff the open segment ab passes through the interior of any obstacle
/// or leaves the closed bounds. Boundary contact alone is not a collision.
bool segment_collides(Vec2 a, Vec2 b, const Workspace& ws);

/// Closed-set convention: touching boundaries intersect.
bool polygons_intersect(const Polygon& a, const Polygon& b);
/// True iff inner lies entirely within the closed outer polygon.
bool polygon_contains_polygon(const Polygon& outer, const Polygon& inner);

/// inf{|s - s'| : s in a, s' in b}; zero iff the closed polygons intersect.
double set_distance(const Polygon& a, const Polygon& b);
/// max of the two directed sup-inf distances between the solid polygons.
double hausdorff_distance(const Polygon& a, const Polygon& b);

/// Intersection of two convex polygons; empty result polygon when disjoint.
/// The output may be degenerate (a segment or point) when the inputs touch.
Polygon convex_clip(const Polygon& subject, const Polygon& clip);

/// Stretch factor for shortest paths inside a convex region of R^n cluttered
/// with small convex obstacles: pi * sqrt(n / (2 (n + 1))).
double jung_epsilon(int n);

}  // namespace angelic

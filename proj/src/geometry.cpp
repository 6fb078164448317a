#include "angelic/geometry.hpp"

#include <algorithm>
#include <limits>

namespace angelic {

double Polygon::signed_area() const {
    double s = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        s += cross(p, q);
    }
    return 0.5 * s;
}

bool Polygon::is_convex() const {
    const size_t n = pts.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        const Vec2& c = pts[(i + 2) % n];
        if (orient(a, b, c) < -kGeomEps) return false;
    }
    return true;
}

void Polygon::aabb(Vec2& lo, Vec2& hi) const {
    lo = {kInf, kInf};
    hi = {-kInf, -kInf};
    for (const Vec2& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
}

Vec2 Polygon::centroid() const {
    // Area-weighted centroid; falls back to the vertex mean for degenerate input.
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        const double w = cross(p, q);
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::abs(a2) < 1e-12) {
        Vec2 m{0, 0};
        for (const Vec2& p : pts) m = m + p;
        return (1.0 / std::max<size_t>(n, 1)) * m;
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

std::string Polygon::validate() const {
    const size_t n = pts.size();
    if (n < 3) return "polygon has fewer than 3 vertices";
    for (const Vec2& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return "polygon has non-finite coordinates";
    }
    for (size_t i = 0; i < n; ++i) {
        if (distance(pts[i], pts[(i + 1) % n]) < 1e-12) return "polygon has a zero-length edge";
    }
    // Simplicity: non-adjacent edges must not meet at all; adjacent edges only
    // at the shared vertex.
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = pts[i], b = pts[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            const Vec2 c = pts[j], d = pts[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // The free tips must stay off the other edge, or the edges
                // fold back over each other.
                const Vec2 tip_i = (j == i + 1) ? a : b;  // endpoint of edge i not shared
                const Vec2 tip_j = (j == i + 1) ? d : c;  // endpoint of edge j not shared
                if (point_on_segment(tip_j, a, b, 1e-12) || point_on_segment(tip_i, c, d, 1e-12))
                    return "polygon has overlapping adjacent edges";
            } else if (segments_intersect(a, b, c, d)) {
                return "polygon is self-intersecting";
            }
        }
    }
    if (signed_area() <= 0.0) return "polygon is not counterclockwise";
    return "";
}

std::string Workspace::validate() const {
    if (std::string e = bounds.validate(); !e.empty()) return "bounds: " + e;
    double obstacle_area = 0.0;
    for (size_t i = 0; i < obstacles.size(); ++i) {
        if (std::string e = obstacles[i].validate(); !e.empty())
            return "obstacle " + std::to_string(i) + ": " + e;
        if (!polygon_contains_polygon(bounds, obstacles[i]))
            return "obstacle " + std::to_string(i) + " is not inside bounds";
        obstacle_area += obstacles[i].signed_area();
    }
    if (obstacle_area >= bounds.signed_area() - 1e-12)
        return "free space appears to be empty";
    return "";
}

bool Workspace::in_free_space(Vec2 p) const {
    if (!point_in_polygon(p, bounds)) return false;
    for (const Polygon& obs : obstacles) {
        if (point_strictly_in_polygon(p, obs)) return false;
    }
    return true;
}

Polygon make_box(double x0, double y0, double x1, double y1) {
    return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b, double eps) {
    return point_segment_distance(p, a, b) <= eps;
}

static int sign_of(double v, double eps = 1e-12) {
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const int o1 = sign_of(orient(a, b, c));
    const int o2 = sign_of(orient(a, b, d));
    const int o3 = sign_of(orient(c, d, a));
    const int o4 = sign_of(orient(c, d, b));
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b, 1e-12)) return true;
    if (o2 == 0 && point_on_segment(d, a, b, 1e-12)) return true;
    if (o3 == 0 && point_on_segment(a, c, d, 1e-12)) return true;
    if (o4 == 0 && point_on_segment(b, c, d, 1e-12)) return true;
    return false;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                    std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

bool point_on_polygon_boundary(Vec2 p, const Polygon& poly, double eps) {
    const size_t n = poly.pts.size();
    for (size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, poly.pts[i], poly.pts[(i + 1) % n], eps)) return true;
    }
    return false;
}

static bool ray_crossings_odd(Vec2 p, const Polygon& poly) {
    bool inside = false;
    const size_t n = poly.pts.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly.pts[i];
        const Vec2& b = poly.pts[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

bool point_in_polygon(Vec2 p, const Polygon& poly) {
    if (point_on_polygon_boundary(p, poly)) return true;
    return ray_crossings_odd(p, poly);
}

bool point_strictly_in_polygon(Vec2 p, const Polygon& poly) {
    if (point_on_polygon_boundary(p, poly)) return false;
    return ray_crossings_odd(p, poly);
}

double point_polygon_distance(Vec2 p, const Polygon& poly) {
    if (point_in_polygon(p, poly)) return 0.0;
    double best = kInf;
    const size_t n = poly.pts.size();
    for (size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(p, poly.pts[i], poly.pts[(i + 1) % n]));
    }
    return best;
}

// Parameters t in [0,1] where segment ab meets the polygon boundary.
static void collect_boundary_hits(Vec2 a, Vec2 b, const Polygon& poly, std::vector<double>& ts) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return;
    const size_t n = poly.pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 c = poly.pts[i];
        const Vec2 d = poly.pts[(i + 1) % n];
        if (!segments_intersect(a, b, c, d)) continue;
        const double denom = cross(ab, d - c);
        if (std::abs(denom) > 1e-12) {
            const double t = cross(c - a, d - c) / denom;
            ts.push_back(std::clamp(t, 0.0, 1.0));
        } else {
            // Collinear or touching case: project the edge endpoints onto ab.
            for (const Vec2& q : {c, d}) {
                if (point_on_segment(q, a, b, 1e-12)) ts.push_back(std::clamp(dot(q - a, ab) / len2, 0.0, 1.0));
            }
            for (const Vec2& q : {a, b}) {
                if (point_on_segment(q, c, d, 1e-12)) ts.push_back(std::clamp(dot(q - a, ab) / len2, 0.0, 1.0));
            }
        }
    }
}

bool segment_collides(Vec2 a, Vec2 b, const Workspace& ws) {
    if (!point_in_polygon(a, ws.bounds) || !point_in_polygon(b, ws.bounds)) return true;
    std::vector<double> ts{0.0, 1.0};
    collect_boundary_hits(a, b, ws.bounds, ts);
    for (const Polygon& obs : ws.obstacles) collect_boundary_hits(a, b, obs, ts);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(), [](double u, double v) { return std::abs(u - v) < 1e-12; }),
             ts.end());
    // Each interval between boundary hits lies wholly inside or outside every
    // polygon, so its midpoint decides the interval.
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const double tm = 0.5 * (ts[i] + ts[i + 1]);
        const Vec2 m = a + tm * (b - a);
        if (!point_in_polygon(m, ws.bounds)) return true;
        for (const Polygon& obs : ws.obstacles) {
            if (point_strictly_in_polygon(m, obs)) return true;
        }
    }
    return false;
}

bool polygons_intersect(const Polygon& a, const Polygon& b) {
    Vec2 alo, ahi, blo, bhi;
    a.aabb(alo, ahi);
    b.aabb(blo, bhi);
    if (alo.x > bhi.x + kGeomEps || blo.x > ahi.x + kGeomEps || alo.y > bhi.y + kGeomEps ||
        blo.y > ahi.y + kGeomEps)
        return false;
    const size_t na = a.pts.size(), nb = b.pts.size();
    for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) {
            if (segments_intersect(a.pts[i], a.pts[(i + 1) % na], b.pts[j], b.pts[(j + 1) % nb]))
                return true;
        }
    }
    return point_in_polygon(a.pts[0], b) || point_in_polygon(b.pts[0], a);
}

bool polygon_contains_polygon(const Polygon& outer, const Polygon& inner) {
    for (const Vec2& p : inner.pts) {
        if (!point_in_polygon(p, outer)) return false;
    }
    const size_t ni = inner.pts.size(), no = outer.pts.size();
    for (size_t i = 0; i < ni; ++i) {
        const Vec2 a = inner.pts[i], b = inner.pts[(i + 1) % ni];
        const Vec2 m = 0.5 * (a + b);
        if (!point_in_polygon(m, outer)) return false;
        for (size_t j = 0; j < no; ++j) {
            const Vec2 c = outer.pts[j], d = outer.pts[(j + 1) % no];
            const int o1 = sign_of(orient(c, d, a));
            const int o2 = sign_of(orient(c, d, b));
            const int o3 = sign_of(orient(a, b, c));
            const int o4 = sign_of(orient(a, b, d));
            if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0) return false;  // proper crossing
        }
    }
    return true;
}

double set_distance(const Polygon& a, const Polygon& b) {
    if (polygons_intersect(a, b)) return 0.0;
    double best = kInf;
    const size_t na = a.pts.size(), nb = b.pts.size();
    for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) {
            best = std::min(best, segment_segment_distance(a.pts[i], a.pts[(i + 1) % na], b.pts[j],
                                                           b.pts[(j + 1) % nb]));
        }
    }
    return best;
}

double hausdorff_distance(const Polygon& a, const Polygon& b) {
    // Distance-to-a-solid-set is convex, so each directed sup is attained at a
    // vertex of the source polygon.
    double h = 0.0;
    for (const Vec2& p : a.pts) h = std::max(h, point_polygon_distance(p, b));
    for (const Vec2& p : b.pts) h = std::max(h, point_polygon_distance(p, a));
    return h;
}

Polygon convex_clip(const Polygon& subject, const Polygon& clip) {
    std::vector<Vec2> out = subject.pts;
    const size_t nc = clip.pts.size();
    for (size_t i = 0; i < nc && !out.empty(); ++i) {
        const Vec2 c = clip.pts[i];
        const Vec2 d = clip.pts[(i + 1) % nc];
        std::vector<Vec2> in;
        in.swap(out);
        const size_t n = in.size();
        for (size_t j = 0; j < n; ++j) {
            const Vec2 p = in[j];
            const Vec2 q = in[(j + 1) % n];
            const double sp = orient(c, d, p);
            const double sq = orient(c, d, q);
            if (sp >= -kGeomEps) out.push_back(p);
            if ((sp > kGeomEps && sq < -kGeomEps) || (sp < -kGeomEps && sq > kGeomEps)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
    }
    // Drop near-duplicate vertices introduced by clipping.
    std::vector<Vec2> dedup;
    for (const Vec2& p : out) {
        if (dedup.empty() || distance(dedup.back(), p) > 1e-9) dedup.push_back(p);
    }
    if (dedup.size() >= 2 && distance(dedup.front(), dedup.back()) <= 1e-9) dedup.pop_back();
    return Polygon(std::move(dedup));
}

double jung_epsilon(int n) {
    const double nn = static_cast<double>(n);
    return 3.14159265358979323846 * std::sqrt(nn / (2.0 * (nn + 1.0)));
}

}  // namespace angelic

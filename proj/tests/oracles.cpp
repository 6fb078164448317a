#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace angelic::oracles {

GridDistances grid_distances(const Polygon& a, const Polygon& b, int cells_per_axis) {
    Vec2 alo, ahi, blo, bhi;
    a.aabb(alo, ahi);
    b.aabb(blo, bhi);
    const Vec2 lo{std::min(alo.x, blo.x), std::min(alo.y, blo.y)};
    const Vec2 hi{std::max(ahi.x, bhi.x), std::max(ahi.y, bhi.y)};
    const double dx = (hi.x - lo.x) / (cells_per_axis - 1);
    const double dy = (hi.y - lo.y) / (cells_per_axis - 1);

    std::vector<Vec2> in_a, in_b;
    for (int i = 0; i < cells_per_axis; ++i) {
        for (int j = 0; j < cells_per_axis; ++j) {
            const Vec2 p{lo.x + i * dx, lo.y + j * dy};
            if (point_in_polygon(p, a)) in_a.push_back(p);
            if (point_in_polygon(p, b)) in_b.push_back(p);
        }
    }
    // Boundary samples cover thin slivers the grid can miss; with both, every
    // polygon point lies within about one cell diagonal of some sample.
    const double step = 0.5 * std::hypot(dx, dy);
    auto sample_boundary = [step](const Polygon& poly, std::vector<Vec2>& out) {
        const size_t n = poly.pts.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2 p = poly.pts[i];
            const Vec2 q = poly.pts[(i + 1) % n];
            const int k = std::max(1, static_cast<int>(std::ceil(distance(p, q) / step)));
            for (int j = 0; j <= k; ++j) out.push_back(p + (static_cast<double>(j) / k) * (q - p));
        }
    };
    sample_boundary(a, in_a);
    sample_boundary(b, in_b);

    double setd = kInf;
    double dir_ab = 0.0, dir_ba = 0.0;
    for (const Vec2& p : in_a) {
        double nearest = kInf;
        for (const Vec2& q : in_b) nearest = std::min(nearest, distance(p, q));
        setd = std::min(setd, nearest);
        dir_ab = std::max(dir_ab, nearest);
    }
    for (const Vec2& q : in_b) {
        double nearest = kInf;
        for (const Vec2& p : in_a) nearest = std::min(nearest, distance(p, q));
        dir_ba = std::max(dir_ba, nearest);
    }
    GridDistances out;
    out.set_distance = setd;
    out.hausdorff = std::max(dir_ab, dir_ba);
    out.resolution = std::hypot(dx, dy);
    return out;
}

Polygon random_polygon(std::mt19937_64& gen, Vec2 center, double max_radius, int min_pts,
                       int max_pts) {
    std::uniform_int_distribution<int> npts(min_pts, max_pts);
    std::uniform_real_distribution<double> unit(0.25, 1.0);
    const int n = npts(gen);
    std::vector<double> angles;
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    for (int i = 0; i < n; ++i) angles.push_back(ang(gen));
    std::sort(angles.begin(), angles.end());
    // Merge near-equal angles to avoid degenerate edges.
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && angles[i] - angles[i - 1] < 0.05) continue;
        const double r = unit(gen) * max_radius;
        pts.push_back({center.x + r * std::cos(angles[i]), center.y + r * std::sin(angles[i])});
    }
    if (pts.size() < 3) {
        pts = {{center.x + max_radius, center.y},
               {center.x, center.y + max_radius},
               {center.x - max_radius, center.y}};
    }
    return Polygon(std::move(pts));
}

double exhaustive_visiting_path(const std::vector<std::vector<double>>& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return 0.0;
    if (n == 2) return w[0][1];
    std::vector<int> mid;
    for (int i = 1; i + 1 < n; ++i) mid.push_back(i);
    double best = kInf;
    std::sort(mid.begin(), mid.end());
    do {
        double c = 0.0;
        int cur = 0;
        for (int v : mid) {
            c += w[cur][v];
            cur = v;
        }
        c += w[cur][n - 1];
        best = std::min(best, c);
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}

}  // namespace angelic::oracles

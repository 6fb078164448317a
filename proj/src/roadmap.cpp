#include "angelic/roadmap.hpp"

#include <algorithm>
#include <queue>

namespace angelic {

double connect_radius(const RoadmapConfig& cfg) {
    return cfg.gamma * std::pow(std::log(static_cast<double>(cfg.n)) / cfg.n, 1.0 / cfg.dim);
}

static double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Roadmap sample_prm_star(const Workspace& ws, const RoadmapConfig& cfg,
                        const std::vector<Vec2>& extra) {
    if (cfg.n < 2) throw SamplingError("roadmap sample count must be at least 2");
    if (cfg.gamma <= 0.0) throw SamplingError("roadmap gamma must be positive");

    Roadmap rm;
    rm.config = cfg;
    rm.connect_radius = connect_radius(cfg);
    rm.extra_count = static_cast<int>(extra.size());
    for (const Vec2& p : extra) {
        if (!ws.in_free_space(p))
            throw SamplingError("anchor point lies outside free space");
        rm.vertices.push_back(p);
    }

    Vec2 lo, hi;
    ws.bounds.aabb(lo, hi);
    std::mt19937_64 gen(cfg.seed);
    const long long max_attempts = 1000LL * cfg.n;
    long long attempts = 0;
    int accepted = 0;
    while (accepted < cfg.n) {
        if (++attempts > max_attempts)
            throw SamplingError("free space too small: rejection sampling cap reached");
        const Vec2 p{lo.x + uniform01(gen) * (hi.x - lo.x), lo.y + uniform01(gen) * (hi.y - lo.y)};
        if (!ws.in_free_space(p)) continue;
        rm.vertices.push_back(p);
        ++accepted;
    }

    const double r = rm.connect_radius;
    const int total = static_cast<int>(rm.vertices.size());
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            const double d = distance(rm.vertices[i], rm.vertices[j]);
            if (d > r || d <= 0.0) continue;
            if (segment_collides(rm.vertices[i], rm.vertices[j], ws)) continue;
            rm.edges.push_back({i, j, d});
        }
    }
    rm.build_adjacency();
    return rm;
}

void Roadmap::build_adjacency() {
    adjacency.assign(vertices.size(), {});
    for (size_t e = 0; e < edges.size(); ++e) {
        adjacency[edges[e].a].push_back({edges[e].b, static_cast<int>(e)});
        adjacency[edges[e].b].push_back({edges[e].a, static_cast<int>(e)});
    }
}

DijkstraResult dijkstra(const Roadmap& rm, int start, const std::function<bool(int)>& goal_test) {
    const int n = static_cast<int>(rm.vertices.size());
    std::vector<double> dist(n, kInf);
    std::vector<int> prev(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[start] = 0.0;
    pq.push({0.0, start});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        if (goal_test(v)) {
            DijkstraResult res;
            res.cost = d;
            for (int u = v; u != -1; u = prev[u]) res.path.push_back(u);
            std::reverse(res.path.begin(), res.path.end());
            return res;
        }
        for (auto [w, e] : rm.adjacency[v]) {
            const double nd = d + rm.edges[e].cost;
            if (nd < dist[w]) {
                dist[w] = nd;
                prev[w] = v;
                pq.push({nd, w});
            }
        }
    }
    return {};
}

std::vector<double> dijkstra_all(const Roadmap& rm, int start) {
    const int n = static_cast<int>(rm.vertices.size());
    std::vector<double> dist(n, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[start] = 0.0;
    pq.push({0.0, start});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (auto [w, e] : rm.adjacency[v]) {
            const double nd = d + rm.edges[e].cost;
            if (nd < dist[w]) {
                dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    return dist;
}

}  // namespace angelic

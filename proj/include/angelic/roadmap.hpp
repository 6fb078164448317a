#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

#include "angelic/geometry.hpp"

namespace angelic {

struct RoadmapConfig {
    int n = 100;           // uniform free-space samples
    double gamma = 2.0;    // connection radius constant
    std::uint64_t seed = 0;
    int dim = 2;
};

struct RoadmapEdge {
    int a = 0;
    int b = 0;
    double cost = 0.0;
};

/// Sampled configurations plus collision-free connections. Undirected: each
/// edge is stored once and traversable both ways. Extra anchor points are
/// placed before the random samples, so their indices are stable.
struct Roadmap {
    std::vector<Vec2> vertices;
    std::vector<RoadmapEdge> edges;
    double connect_radius = 0.0;
    RoadmapConfig config;
    int extra_count = 0;

    // adjacency[v] lists (neighbor, edge index) pairs.
    std::vector<std::vector<std::pair<int, int>>> adjacency;
    void build_adjacency();
};

double connect_radius(const RoadmapConfig& cfg);

struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bit-exact across platforms: mt19937_64 output mapped to [0,1) with a
/// 53-bit mantissa, rejection-sampled over the bounds box.
Roadmap sample_prm_star(const Workspace& ws, const RoadmapConfig& cfg,
                        const std::vector<Vec2>& extra = {});

struct DijkstraResult {
    double cost = kInf;
    std::vector<int> path;  // empty when unreachable
};

DijkstraResult dijkstra(const Roadmap& rm, int start,
                        const std::function<bool(int)>& goal_test);

/// Shortest-path costs from start to every vertex (kInf when unreachable).
std::vector<double> dijkstra_all(const Roadmap& rm, int start);

}  // namespace angelic

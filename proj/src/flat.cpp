#include "angelic/flat.hpp"

#include <queue>
#include <stdexcept>

namespace angelic {

std::string ExplicitGraph::validate() const {
    const int n = static_cast<int>(vertices.size());
    if (n == 0) return "graph has no vertices";
    if (goal < 0 || goal >= n) return "goal vertex out of range";
    if (static_cast<int>(heuristic.size()) != n) return "heuristic size mismatch";
    if (heuristic[goal] != 0.0) return "heuristic must be zero at the goal";
    for (double h : heuristic) {
        if (h < 0.0) return "heuristic must be nonnegative";
    }
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) return "edge endpoint out of range";
        if (!(e.cost > 0.0)) return "edge costs must be positive";
    }
    return "";
}

FlatAbstraction::FlatAbstraction(ExplicitGraph g, int start) : graph_(std::move(g)), start_(start) {
    if (start_ < 0 || start_ >= static_cast<int>(graph_.vertices.size()))
        throw std::invalid_argument("start vertex not in graph");
    act_op_ = static_cast<OpId>(graph_.edges.size());
    out_edges_.assign(graph_.vertices.size(), {});
    for (size_t e = 0; e < graph_.edges.size(); ++e)
        out_edges_[graph_.edges[e].from].push_back(static_cast<int>(e));
}

std::string FlatAbstraction::op_name(OpId op) const {
    if (op == act_op_) return "Act";
    const ExplicitGraph::Edge& e = graph_.edges.at(op);
    return graph_.vertices[e.from] + "->" + graph_.vertices[e.to];
}

SymbolicValuation FlatAbstraction::op_valuation(OpId op) {
    SymbolicValuation v;
    if (op == act_op_) {
        for (int u = 0; u < static_cast<int>(graph_.vertices.size()); ++u) {
            v.insert({u, graph_.goal, graph_.heuristic[u], kInf});
        }
    } else {
        const ExplicitGraph::Edge& e = graph_.edges.at(op);
        v.insert({e.from, e.to, e.cost, e.cost});
    }
    return v;
}

void FlatAbstraction::op_tuples_from(OpId op, StateId post, std::vector<BoundTuple>& out) {
    out.clear();
    if (op == act_op_) {
        out.push_back({post, graph_.goal, graph_.heuristic.at(post), kInf});
    } else {
        const ExplicitGraph::Edge& e = graph_.edges.at(op);
        out.push_back({e.from, e.to, e.cost, e.cost});
    }
}

std::vector<Refinement> FlatAbstraction::refinements(OpId op, StateId post) {
    std::vector<Refinement> out;
    if (op != act_op_) return out;  // edges are primitive
    for (int e : out_edges_.at(post)) {
        out.push_back({static_cast<OpId>(e), act_op_});
        if (graph_.edges[e].to == graph_.goal) out.push_back({static_cast<OpId>(e)});
    }
    return out;
}

double FlatAbstraction::min_operator_lower_bound() const {
    double m = kInf;
    for (const ExplicitGraph::Edge& e : graph_.edges) m = std::min(m, e.cost);
    return m;
}

FlatAbstraction flat_abstraction(ExplicitGraph g, int start) {
    if (std::string err = g.validate(); !err.empty()) throw std::invalid_argument(err);
    return FlatAbstraction(std::move(g), start);
}

double graph_dijkstra(const ExplicitGraph& g, int start) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> out(n);
    for (size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].from].push_back(static_cast<int>(e));
    std::vector<double> dist(n, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[start] = 0.0;
    pq.push({0.0, start});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        if (v == g.goal) return d;
        for (int e : out[v]) {
            const double nd = d + g.edges[e].cost;
            if (nd < dist[g.edges[e].to]) {
                dist[g.edges[e].to] = nd;
                pq.push({nd, g.edges[e].to});
            }
        }
    }
    return kInf;
}

}  // namespace angelic

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "angelic/abstraction.hpp"

namespace angelic {

/// Weighted digraph with a goal vertex and an admissible heuristic. Wrapping
/// it as an abstraction grounds ordinary heuristic graph search in the same
/// machinery as the continuous domains.
struct ExplicitGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        double cost = 0.0;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    int goal = 0;
    std::vector<double> heuristic;  // one entry per vertex, 0 at the goal

    std::string validate() const;
};

/// States are singleton vertices; operators are the edges plus Act, whose
/// valuation carries the heuristic as a lower bound to the goal.
class FlatAbstraction final : public Abstraction {
public:
    FlatAbstraction(ExplicitGraph g, int start);

    bool intersects(StateId a, StateId b) const override { return a == b; }
    bool subset_of(StateId a, StateId b) const override { return a == b; }
    int state_count() const override { return static_cast<int>(graph_.vertices.size()); }
    void intersectors(StateId s, std::vector<StateId>& out) const override {
        out.assign(1, s);
    }

    StateId start_state() const override { return start_; }
    StateId goal_state() const override { return graph_.goal; }
    std::string state_name(StateId s) const override { return graph_.vertices.at(s); }
    std::int64_t concrete_id(StateId s) const override { return s; }

    OpId act() const override { return act_op_; }
    bool is_primitive(OpId op) const override { return op != act_op_; }
    std::string op_name(OpId op) const override;

    SymbolicValuation op_valuation(OpId op) override;
    void op_tuples_from(OpId op, StateId post, std::vector<BoundTuple>& out) override;
    std::vector<Refinement> refinements(OpId op, StateId post) override;

    double min_operator_lower_bound() const override;

    const ExplicitGraph& graph() const { return graph_; }

private:
    ExplicitGraph graph_;
    int start_ = 0;
    OpId act_op_ = 0;
    std::vector<std::vector<int>> out_edges_;  // per vertex, edge indices
};

FlatAbstraction flat_abstraction(ExplicitGraph g, int start);

/// Exact shortest-path cost over the explicit graph; test oracle.
double graph_dijkstra(const ExplicitGraph& g, int start);

}  // namespace angelic

#include "angelic/toy.hpp"

#include <algorithm>

namespace angelic {

double ValuationTable::lower_over(std::uint32_t src_mask, std::uint32_t dst_mask) const {
    double best = kInf;
    for (int s = 0; s < n; ++s) {
        if (!(src_mask & (1u << s))) continue;
        for (int d = 0; d < n; ++d) {
            if (!(dst_mask & (1u << d))) continue;
            best = std::min(best, at(s, d));
        }
    }
    return best;
}

double ValuationTable::upper_over(std::uint32_t src_mask, std::uint32_t dst_mask) const {
    double worst = 0.0;
    bool any_src = false;
    for (int s = 0; s < n; ++s) {
        if (!(src_mask & (1u << s))) continue;
        any_src = true;
        double best = kInf;
        for (int d = 0; d < n; ++d) {
            if (!(dst_mask & (1u << d))) continue;
            best = std::min(best, at(s, d));
        }
        worst = std::max(worst, best);
    }
    return any_src ? worst : kInf;
}

double ValuationTable::strong_upper_over(std::uint32_t src_mask, std::uint32_t dst_mask) const {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
        if (!(src_mask & (1u << s))) continue;
        for (int d = 0; d < n; ++d) {
            if (!(dst_mask & (1u << d))) continue;
            worst = std::max(worst, at(s, d));
            if (worst == kInf) return kInf;
        }
    }
    return worst;
}

namespace {

struct Enumerator {
    const ToyOperator& op;
    const ToyUniverse& uni;
    long long cap;
    long long count = 0;
    ValuationTable table;

    void run() {
        table.n = uni.n_states;
        table.v.assign(static_cast<size_t>(uni.n_states) * uni.n_states, kInf);
        for (int s = 0; s < uni.n_states; ++s) {
            if (!(op.start_mask & (1u << s))) continue;
            if (op.allow_empty && (op.end_mask & (1u << s))) record(s, s, 0.0);
            std::vector<char> visited(uni.n_states, 0);
            visited[s] = 1;
            dfs(s, s, 0.0, visited);
        }
    }

    void record(int s0, int s1, double cost) {
        double& slot = table.at(s0, s1);
        slot = std::min(slot, cost);
    }

    // Positive edge costs make optimal plans simple paths, so enumerating
    // simple paths is exhaustive for valuation purposes.
    void dfs(int s0, int cur, double cost, std::vector<char>& visited) {
        for (int ei : op.allowed_edges) {
            const ToyUniverse::Edge& e = uni.edges[ei];
            if (e.from != cur) continue;
            if (visited[e.to]) continue;
            if (!(op.stay_mask & (1u << cur))) continue;  // cur is now interior
            if (++count > cap) throw EnumerationCapError("path enumeration cap exceeded");
            if (op.end_mask & (1u << e.to)) record(s0, e.to, cost + e.cost);
            visited[e.to] = 1;
            dfs(s0, e.to, cost + e.cost, visited);
            visited[e.to] = 0;
        }
    }
};

}  // namespace

ValuationTable brute_force_valuation(const ToyOperator& op, const ToyUniverse& universe,
                                     long long enumeration_cap) {
    for (int ei : op.allowed_edges) {
        if (universe.edges.at(ei).cost <= 0.0)
            throw std::invalid_argument("toy edge costs must be positive");
    }
    Enumerator en{op, universe, enumeration_cap};
    en.run();
    return en.table;
}

ValuationTable compose_tables(const ValuationTable& a, const ValuationTable& b) {
    ValuationTable out;
    out.n = a.n;
    out.v.assign(static_cast<size_t>(a.n) * a.n, kInf);
    for (int s = 0; s < a.n; ++s) {
        for (int m = 0; m < a.n; ++m) {
            if (a.at(s, m) == kInf) continue;
            for (int d = 0; d < a.n; ++d) {
                if (b.at(m, d) == kInf) continue;
                out.at(s, d) = std::min(out.at(s, d), a.at(s, m) + b.at(m, d));
            }
        }
    }
    return out;
}

ValuationTable union_tables(const ValuationTable& a, const ValuationTable& b) {
    ValuationTable out = a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = std::min(out.v[i], b.v[i]);
    return out;
}

StateId ToyStateSpace::add_state(std::uint32_t mask) {
    masks_.push_back(mask);
    return static_cast<StateId>(masks_.size() - 1);
}

}  // namespace angelic

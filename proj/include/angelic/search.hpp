#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "angelic/abstraction.hpp"
#include "angelic/plan.hpp"

namespace angelic {

enum class SearchMode { angelic, acyclic, approximate };

enum class Termination { optimal, w_optimal, infeasible, cap };

const char* to_string(Termination t);

struct SearchConfig {
    SearchMode mode = SearchMode::acyclic;
    double weight = 1.0;  // priority inflation; 1 preserves optimality
    std::int64_t expansion_cap = 1000000;
    bool positive_lower_bound_required = true;
    bool trace = false;
};

struct SearchConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchStats {
    double cost = kInf;
    double wall_seconds = 0.0;
    std::int64_t plans_expanded = 0;
    std::int64_t states_explored = 0;
    Termination terminated = Termination::infeasible;
};

struct TraceRecord {
    std::int64_t id = 0;
    std::int64_t parent = -1;
    double key = 0.0;
    double lower = 0.0;
    double upper = kInf;
    int depth = 0;
    std::string label;
    int successors = 0;
};

struct SearchResult {
    bool found = false;
    std::vector<OpId> plan;
    SearchStats stats;
    std::vector<TraceRecord> trace;
};

/// Priority of a plan node: root is 0, and each step adds the inflated lower
/// bound increment, capped by the plan's own upper bound.
double plan_key(const PlanNode& plan, double w);

/// A plan is acyclic when no proper prefix already reaches, at no greater
/// lower bound, every state pair the plan reaches.
bool is_acyclic(const PlanNode& plan, const Abstraction& abs);

/// Search frontier: the open queue, the best primitive plan found, deferred
/// cyclic extensions, and the per-extension bound table used for pruning.
class Frontier {
public:
    Frontier(Abstraction& abs, const SearchConfig& cfg);

    const PlanNode* root() const { return root_; }
    const PlanNode* best_primitive() const { return best_; }
    bool queue_empty() const { return queue_.empty(); }
    const PlanNode* queue_top() const { return queue_.top(); }
    const PlanNode* pop();
    void enqueue(const PlanNode* node);
    void maybe_update_best(const PlanNode* node);

    /// Builds the chain base . ops, computing valuations step by step. Returns
    /// null when the result is infeasible, pruned by the bound table, or (in
    /// deferring modes) cyclic — in which case the extension is parked in the
    /// deferred set for later reactivation.
    const PlanNode* propagate_chain(const PlanNode* base, const std::vector<OpId>& ops,
                                    const PlanNode* creator, bool defer_on_cycle);

    std::int64_t states_explored() const { return static_cast<std::int64_t>(states_seen_.size()); }
    std::int64_t deferred_count() const { return static_cast<std::int64_t>(deferred_.size()); }

    Abstraction& abstraction() { return abs_; }
    const SearchConfig& config() const { return cfg_; }

private:
    friend std::vector<const PlanNode*> expand(Frontier& f, const PlanNode* plan);
    friend SearchResult search(Abstraction& abs, const SearchConfig& cfg);

    struct WorseOrder {
        bool operator()(const PlanNode* a, const PlanNode* b) const;
    };

    struct DeferredEntry {
        const PlanNode* base = nullptr;
        std::vector<OpId> ops;
        std::vector<const PlanNode*> tried;
    };

    PlanNode* new_node();
    bool suffix_acyclic(const PlanNode* node) const;
    bool bound_table_prunes(const SymbolicValuation& bound, const SymbolicValuation& val) const;
    void note_states(const SymbolicValuation& val);
    void record_deferral(const PlanNode* base, const std::vector<OpId>& ops);

    Abstraction& abs_;
    SearchConfig cfg_;
    std::deque<PlanNode> arena_;
    std::priority_queue<const PlanNode*, std::vector<const PlanNode*>, WorseOrder> queue_;
    const PlanNode* root_ = nullptr;
    const PlanNode* best_ = nullptr;
    std::map<std::vector<OpId>, SymbolicValuation> bound_table_;
    std::vector<DeferredEntry> deferred_;
    std::unordered_map<const PlanNode*, std::vector<size_t>> deferred_by_base_;
    std::unordered_set<std::int64_t> states_seen_;
    std::unordered_map<const PlanNode*, std::int64_t> expansion_ids_;
    std::uint64_t seq_ = 0;
};

/// True when the best primitive plan strictly beats the lower bound of the
/// minimum-key frontier plan, so every remaining plan is dominated.
bool terminate_check(const Frontier& f);

/// Successors of a dequeued plan: refinements of its head propagated over the
/// extension, plus (in deferring modes) reactivated deferred extensions of
/// genealogy ancestors.
std::vector<const PlanNode*> expand(Frontier& f, const PlanNode* plan);

SearchResult search(Abstraction& abs, const SearchConfig& cfg);

}  // namespace angelic

#include "angelic/search.hpp"

#include <algorithm>
#include <chrono>

namespace angelic {

const char* to_string(Termination t) {
    switch (t) {
        case Termination::optimal: return "optimal";
        case Termination::w_optimal: return "w-optimal";
        case Termination::infeasible: return "infeasible";
        case Termination::cap: return "cap";
    }
    return "?";
}

double plan_key(const PlanNode& plan, double w) {
    if (plan.is_root()) return 0.0;
    const double stepped =
        plan_key(*plan.pred, w) + w * (plan.lower_own - plan.pred->lower_own);
    return std::min(stepped, plan.upper_own);
}

bool is_acyclic(const PlanNode& plan, const Abstraction& abs) {
    for (const PlanNode* b = &plan; !b->is_root(); b = b->pred) {
        if (b->acyclic_ok) continue;  // already verified together with its prefixes
        for (const PlanNode* a = b->pred; a != nullptr; a = a->pred) {
            if (lower_profile_dominates(a->val, b->val, abs)) return false;
            if (a->is_root()) break;
        }
    }
    return true;
}

bool Frontier::WorseOrder::operator()(const PlanNode* a, const PlanNode* b) const {
    if (a->key != b->key) return a->key > b->key;
    if (a->upper_own != b->upper_own) return a->upper_own > b->upper_own;
    if (a->base->depth != b->base->depth) return a->base->depth < b->base->depth;
    return a->seq > b->seq;
}

Frontier::Frontier(Abstraction& abs, const SearchConfig& cfg) : abs_(abs), cfg_(cfg) {
    PlanNode* root = new_node();
    root->op = -1;
    root->pred = nullptr;
    root->base = root;
    root->creator = nullptr;
    BoundTuple t{abs.start_state(), abs.start_state(), 0.0, 0.0};
    root->val.insert(t);
    root->lower_own = 0.0;
    root->upper_own = 0.0;
    root->lower_goal = v_lower(root->val, abs.start_state(), abs.goal_state(), abs);
    root->upper_goal = abs.subset_of(abs.start_state(), abs.goal_state()) ? 0.0 : kInf;
    root->key = 0.0;
    root->depth = 0;
    root->acyclic_ok = true;
    note_states(root->val);
    root_ = root;
    if (root->upper_goal < kInf) best_ = root;
}

PlanNode* Frontier::new_node() {
    arena_.emplace_back();
    return &arena_.back();
}

const PlanNode* Frontier::pop() {
    const PlanNode* top = queue_.top();
    queue_.pop();
    return top;
}

void Frontier::enqueue(const PlanNode* node) { queue_.push(node); }

void Frontier::maybe_update_best(const PlanNode* node) {
    if (!node->fully_primitive() || node->upper_goal == kInf) return;
    if (best_ == nullptr || node->upper_goal < best_->upper_goal) best_ = node;
}

void Frontier::note_states(const SymbolicValuation& val) {
    for (const BoundTuple& t : val.tuples()) {
        for (StateId s : {t.src, t.dst}) {
            const std::int64_t cid = abs_.concrete_id(s);
            if (cid >= 0) states_seen_.insert(cid);
        }
    }
}

bool Frontier::suffix_acyclic(const PlanNode* node) const {
    for (const PlanNode* a = node->pred; a != nullptr; a = a->pred) {
        if (lower_profile_dominates(a->val, node->val, abs_)) return false;
        if (a->is_root()) break;
    }
    return true;
}

bool Frontier::bound_table_prunes(const SymbolicValuation& bound,
                                  const SymbolicValuation& val) const {
    // Keep the plan unless every state pair it optimistically reaches is
    // already reached at no greater cost by an exact certificate (a tuple
    // whose upper equals its lower) recorded under the same extension.
    std::vector<StateId> xs, xps;
    for (const BoundTuple& ts : val.tuples()) {
        abs_.intersectors(ts.src, xs);
        for (const BoundTuple& td : val.tuples()) {
            abs_.intersectors(td.dst, xps);
            for (StateId xp : xps) {
                for (StateId x : xs) {
                    const double bl = v_lower(val, x, xp, abs_);
                    if (bl == kInf) continue;
                    double cert = kInf;
                    for (const BoundTuple& t : bound.tuples()) {
                        if (t.upper == t.lower && t.upper < cert && abs_.subset_of(x, t.src) &&
                            abs_.subset_of(xp, t.dst))
                            cert = t.upper;
                    }
                    if (!(cert <= bl)) return false;
                }
            }
        }
    }
    return true;
}

void Frontier::record_deferral(const PlanNode* base, const std::vector<OpId>& ops) {
    auto& at_base = deferred_by_base_[base];
    for (size_t idx : at_base) {
        if (deferred_[idx].ops == ops) return;
    }
    DeferredEntry e;
    e.base = base;
    e.ops = ops;
    e.tried.push_back(base);  // retrying on the recording base cannot change the outcome
    at_base.push_back(deferred_.size());
    deferred_.push_back(std::move(e));
}

const PlanNode* Frontier::propagate_chain(const PlanNode* base, const std::vector<OpId>& ops,
                                          const PlanNode* creator, bool defer_on_cycle) {
    const PlanNode* cur = base;
    const PlanNode* prim_prefix_end = base;
    std::vector<BoundTuple> opbuf;
    for (size_t i = 0; i < ops.size(); ++i) {
        const OpId op = ops[i];
        SymbolicValuation nv;
        for (const BoundTuple& ta : cur->val.tuples()) {
            abs_.op_tuples_from(op, ta.dst, opbuf);
            for (const BoundTuple& tb : opbuf) {
                if (abs_.subset_of(ta.dst, tb.src)) {
                    nv.insert({ta.src, tb.dst, ta.lower + tb.lower, ta.upper + tb.upper});
                } else if (abs_.intersects(ta.dst, tb.src)) {
                    nv.insert({ta.src, tb.dst, ta.lower + tb.lower, kInf});
                }
            }
        }
        if (nv.empty()) return nullptr;
        nv.remove_dominated_tuples(abs_);

        PlanNode* node = new_node();
        node->op = op;
        node->pred = cur;
        node->creator = creator;
        const bool advance = abs_.is_primitive(op) && cur == prim_prefix_end;
        node->base = advance ? node : prim_prefix_end;
        prim_prefix_end = node->base;
        node->val = std::move(nv);
        node->lower_own = node->val.min_lower();
        node->upper_own = node->val.min_upper();
        node->lower_goal = v_lower(node->val, abs_.start_state(), abs_.goal_state(), abs_);
        node->upper_goal = kInf;
        for (const BoundTuple& t : node->val.tuples()) {
            if (t.upper < node->upper_goal && abs_.subset_of(t.dst, abs_.goal_state()))
                node->upper_goal = t.upper;
        }
        node->key = std::min(cur->key + cfg_.weight * (node->lower_own - cur->lower_own),
                             node->upper_own);
        node->depth = cur->depth + 1;
        node->seq = ++seq_;
        note_states(node->val);

        if (defer_on_cycle) {
            if (!suffix_acyclic(node)) {
                record_deferral(base, ops);
                return nullptr;
            }
            node->acyclic_ok = true;
        }

        std::vector<OpId> ext_key(ops.begin() + static_cast<long>(i) + 1, ops.end());
        auto it = bound_table_.find(ext_key);
        if (it == bound_table_.end()) {
            bound_table_.emplace(std::move(ext_key), node->val);
        } else {
            if (bound_table_prunes(it->second, node->val)) return nullptr;
            it->second = join(it->second, node->val);
        }
        cur = node;
    }
    return cur;
}

bool terminate_check(const Frontier& f) {
    const PlanNode* best = f.best_primitive();
    if (best == nullptr || f.queue_empty()) return false;
    return best->upper_goal < f.queue_top()->lower_goal;
}

std::vector<const PlanNode*> expand(Frontier& f, const PlanNode* plan) {
    std::vector<const PlanNode*> out;
    Abstraction& abs = f.abstraction();
    const bool deferring = f.config().mode != SearchMode::angelic;

    if (!plan->fully_primitive()) {
        const Decomposition d = decompose(*plan);
        std::vector<StateId> posts;
        for (const BoundTuple& t : d.base->val.tuples()) {
            if (std::find(posts.begin(), posts.end(), t.dst) == posts.end())
                posts.push_back(t.dst);
        }
        for (StateId post : posts) {
            for (const Refinement& r : abs.refinements(d.head, post)) {
                std::vector<OpId> ops;
                ops.reserve(r.size() + d.ext.size());
                ops.insert(ops.end(), r.begin(), r.end());
                ops.insert(ops.end(), d.ext.begin(), d.ext.end());
                const PlanNode* node = f.propagate_chain(d.base, ops, plan, deferring);
                if (node != nullptr && node->lower_goal < kInf) out.push_back(node);
            }
        }
    }

    if (deferring) {
        // Reactivate deferred extensions recorded at genealogy ancestors; a
        // deeper base can break the cycle that parked them.
        std::vector<const PlanNode*> visited;
        const PlanNode* pa = plan;
        while (true) {
            const PlanNode* parent = pa->creator;
            if (parent == nullptr) break;
            pa = parent->base;
            if (std::find(visited.begin(), visited.end(), pa) != visited.end()) continue;
            visited.push_back(pa);
            auto it = f.deferred_by_base_.find(pa);
            if (it == f.deferred_by_base_.end()) continue;
            for (size_t idx : it->second) {
                Frontier::DeferredEntry& e = f.deferred_[idx];
                if (std::find(e.tried.begin(), e.tried.end(), plan->base) != e.tried.end())
                    continue;
                e.tried.push_back(plan->base);
                const PlanNode* node =
                    f.propagate_chain(plan->base, e.ops, plan, /*defer_on_cycle=*/true);
                if (node != nullptr && node->lower_goal < kInf) out.push_back(node);
            }
        }
    }
    return out;
}

SearchResult search(Abstraction& abs, const SearchConfig& cfg) {
    if (cfg.weight < 1.0) throw SearchConfigError("weight must be at least 1");
    if (cfg.mode == SearchMode::angelic && cfg.positive_lower_bound_required &&
        !(abs.min_operator_lower_bound() > 0.0)) {
        throw SearchConfigError(
            "this mode requires a strictly positive lower bound on every operator");
    }

    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    Frontier f(abs, cfg);

    const PlanNode* p0 =
        f.propagate_chain(f.root(), {abs.act()}, nullptr, cfg.mode != SearchMode::angelic);
    if (p0 != nullptr && p0->lower_goal < kInf) f.enqueue(p0);

    bool capped = false;
    while (!f.queue_empty()) {
        const PlanNode* plan = f.pop();
        if (f.best_primitive() != nullptr &&
            f.best_primitive()->upper_goal < plan->lower_goal) {
            break;  // every remaining plan is dominated
        }
        if (res.stats.plans_expanded >= cfg.expansion_cap) {
            capped = true;
            break;
        }
        const std::int64_t id = res.stats.plans_expanded++;
        f.expansion_ids_[plan] = id;

        std::vector<const PlanNode*> succ = expand(f, plan);
        for (const PlanNode* s : succ) f.maybe_update_best(s);
        const PlanNode* best = f.best_primitive();
        int kept = 0;
        for (const PlanNode* s : succ) {
            if (best != nullptr && best->upper_goal < s->lower_goal) continue;
            f.enqueue(s);
            ++kept;
        }
        if (cfg.trace) {
            TraceRecord tr;
            tr.id = id;
            auto pit = plan->creator ? f.expansion_ids_.find(plan->creator) : f.expansion_ids_.end();
            tr.parent = (pit != f.expansion_ids_.end()) ? pit->second : -1;
            tr.key = plan->key;
            tr.lower = plan->lower_goal;
            tr.upper = plan->upper_goal;
            tr.depth = plan->depth;
            tr.label = plan->is_root() ? "root" : abs.op_name(plan->op);
            tr.successors = kept;
            res.trace.push_back(std::move(tr));
        }
    }

    const PlanNode* best = f.best_primitive();
    if (best != nullptr && !capped) {
        res.found = true;
        res.plan = plan_operators(*best);
        res.stats.cost = best->upper_goal;
        res.stats.terminated = cfg.weight > 1.0 ? Termination::w_optimal : Termination::optimal;
    } else if (capped) {
        res.stats.terminated = Termination::cap;
    } else {
        res.stats.terminated = Termination::infeasible;
    }
    res.stats.states_explored = f.states_explored();
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace angelic

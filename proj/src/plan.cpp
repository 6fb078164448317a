#include "angelic/plan.hpp"

#include <algorithm>

namespace angelic {

Decomposition decompose(const PlanNode& plan) {
    if (plan.is_root()) throw std::logic_error("root plan has no decomposition");
    Decomposition d;
    d.base = plan.base;
    std::vector<OpId> after_base;
    for (const PlanNode* n = &plan; n != plan.base; n = n->pred) after_base.push_back(n->op);
    std::reverse(after_base.begin(), after_base.end());
    if (after_base.empty()) {
        // Fully primitive plan: the final operator is its own head.
        d.base = plan.pred;
        d.head = plan.op;
        return d;
    }
    d.head = after_base.front();
    d.ext.assign(after_base.begin() + 1, after_base.end());
    return d;
}

std::vector<OpId> plan_operators(const PlanNode& plan) {
    std::vector<OpId> ops;
    for (const PlanNode* n = &plan; !n->is_root(); n = n->pred) ops.push_back(n->op);
    std::reverse(ops.begin(), ops.end());
    return ops;
}

}  // namespace angelic

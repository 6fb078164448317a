#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "angelic/valuation.hpp"

namespace angelic {

/// One node of the plan tree. A node stands for the whole plan prefix ending
/// at its operator; `base` marks the end of the fully primitive prefix, and
/// the operator right after `base` is the next one to refine.
struct PlanNode {
    OpId op = -1;  // -1 on the root
    const PlanNode* pred = nullptr;
    const PlanNode* base = nullptr;
    /// Final node of the plan whose expansion created this chain; null for
    /// the initial plan. Drives reactivation of deferred extensions.
    const PlanNode* creator = nullptr;

    SymbolicValuation val;

    double lower_own = 0.0;   // min tuple lower: accumulated optimistic cost
    double upper_own = kInf;  // min tuple upper
    double lower_goal = kInf;
    double upper_goal = kInf;  // finite only with a certificate ending inside the goal
    double key = 0.0;
    int depth = 0;
    std::uint64_t seq = 0;
    bool acyclic_ok = false;

    bool is_root() const { return pred == nullptr; }
    bool fully_primitive() const { return base == this; }
};

struct Decomposition {
    const PlanNode* base = nullptr;
    OpId head = -1;
    std::vector<OpId> ext;  // operators after the head, in plan order
};

/// Splits a plan into base / head / extension. Throws on the root plan.
Decomposition decompose(const PlanNode& plan);

/// Operator sequence from the root to this node (root excluded).
std::vector<OpId> plan_operators(const PlanNode& plan);

}  // namespace angelic

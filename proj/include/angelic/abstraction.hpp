#pragma once

#include <string>
#include <vector>

#include "angelic/valuation.hpp"

namespace angelic {

/// One candidate replacement for an operator: the sequence it refines into.
using Refinement = std::vector<OpId>;

/// Everything a search needs about a problem: the abstract-state vocabulary
/// with its relations, the operator set with a distinguished top-level Act,
/// valuation bounds per operator, and the refinement generator.
class Abstraction : public StateRelations {
public:
    virtual StateId start_state() const = 0;
    virtual StateId goal_state() const = 0;
    virtual std::string state_name(StateId s) const = 0;
    /// Identity of the concrete state behind a singleton abstract state, or
    /// -1. Used only for distinct-state accounting.
    virtual std::int64_t concrete_id(StateId s) const { (void)s; return -1; }

    virtual OpId act() const = 0;
    virtual bool is_primitive(OpId op) const = 0;
    virtual std::string op_name(OpId op) const = 0;

    /// Full valuation bound of an operator.
    virtual SymbolicValuation op_valuation(OpId op) = 0;
    /// Tuples of op whose src can match a predecessor ending in `post`. May
    /// return extra tuples; the propagation step applies the exact relation
    /// tests. Default: everything.
    virtual void op_tuples_from(OpId op, StateId post, std::vector<BoundTuple>& out) {
        out.clear();
        const SymbolicValuation v = op_valuation(op);
        out.assign(v.tuples().begin(), v.tuples().end());
    }

    /// Refinements of `op` applicable when the refined prefix ends in `post`.
    virtual std::vector<Refinement> refinements(OpId op, StateId post) = 0;

    /// Smallest lower bound over all non-Act operators; gates the search mode
    /// that requires strictly positive operator costs.
    virtual double min_operator_lower_bound() const = 0;
};

}  // namespace angelic

#pragma once

#include <cstdint>
#include <vector>

#include "angelic/geometry.hpp"  // kInf

namespace angelic {

using StateId = std::int32_t;
using OpId = std::int32_t;

/// Decidable relations over a finite vocabulary of abstract states. Each
/// domain supplies these; the core never inspects geometry or masks itself.
class StateRelations {
public:
    virtual ~StateRelations() = default;
    virtual bool intersects(StateId a, StateId b) const = 0;
    virtual bool subset_of(StateId a, StateId b) const = 0;
    virtual int state_count() const = 0;
    /// All vocabulary states intersecting s. May over-approximate (extra
    /// entries are harmless); must never miss a true intersector.
    virtual void intersectors(StateId s, std::vector<StateId>& out) const {
        out.clear();
        for (StateId t = 0; t < state_count(); ++t) {
            if (intersects(s, t)) out.push_back(t);
        }
    }
};

/// One cost interval: any plan from src to dst costs at least `lower`; from
/// every state of src some state of dst is reachable at cost at most `upper`.
struct BoundTuple {
    StateId src = -1;
    StateId dst = -1;
    double lower = 0.0;
    double upper = kInf;
};

/// Finite set of bound tuples with unique (src, dst) keys; the empty set is
/// the everywhere-infeasible valuation.
class SymbolicValuation {
public:
    SymbolicValuation() = default;
    explicit SymbolicValuation(std::vector<BoundTuple> ts);

    /// Merges on an existing (src, dst) key as (min lower, min upper).
    void insert(const BoundTuple& t);

    const std::vector<BoundTuple>& tuples() const { return tuples_; }
    bool empty() const { return tuples_.empty(); }
    size_t size() const { return tuples_.size(); }

    /// Drops tuples that can never decide a lower or upper query because a
    /// second tuple with superset states and no-worse bounds exists.
    void remove_dominated_tuples(const StateRelations& rel);

    double min_lower() const;
    double min_upper() const;

private:
    std::vector<BoundTuple> tuples_;
};

/// inf of lower over tuples whose src intersects s and dst intersects s_prime.
double v_lower(const SymbolicValuation& v, StateId s, StateId s_prime, const StateRelations& rel);

/// inf of upper over tuples with s inside src and s_prime inside dst.
double v_upper(const SymbolicValuation& v, StateId s, StateId s_prime, const StateRelations& rel);

/// Sequencing rule for valuation bounds: subset matches add both bounds,
/// intersection-only matches keep the lower sum and lose the upper.
SymbolicValuation propagate(const SymbolicValuation& a, const SymbolicValuation& b,
                            const StateRelations& rel);

/// Set union merged per (src, dst) key; bounds the union of the plan sets.
SymbolicValuation join(const SymbolicValuation& a, const SymbolicValuation& b);

/// True iff over every vocabulary state pair, a's upper bound beats b's lower
/// bound (strictly when `strict`), or b is infeasible there.
bool dominates(const SymbolicValuation& a, const SymbolicValuation& b, bool strict,
               const StateRelations& rel);

/// Weak domination of lower-bound profiles: a reaches every state pair b
/// reaches at no greater lower bound. Drives the acyclicity test.
bool lower_profile_dominates(const SymbolicValuation& a, const SymbolicValuation& b,
                             const StateRelations& rel);

}  // namespace angelic

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "angelic/valuation.hpp"

namespace angelic {

/// Small explicit graph used to validate valuation machinery exhaustively.
struct ToyUniverse {
    struct Edge {
        int from = 0;
        int to = 0;
        double cost = 0.0;
    };
    int n_states = 0;
    std::vector<Edge> edges;
};

/// An operator as constraints on primitive plans over a toy universe: plans
/// use the allowed edges, start inside start_mask, keep every state before
/// the last inside stay_mask, and end inside end_mask. allow_empty admits the
/// zero-cost constant plan at states satisfying both start and end masks.
struct ToyOperator {
    std::vector<int> allowed_edges;
    std::uint32_t start_mask = 0;
    std::uint32_t stay_mask = 0;
    std::uint32_t end_mask = 0;
    bool allow_empty = false;
};

/// Exact valuation V[a](s1, s2) for every concrete state pair.
struct ValuationTable {
    int n = 0;
    std::vector<double> v;  // row-major, kInf where no plan exists

    double at(int s1, int s2) const { return v[static_cast<size_t>(s1) * n + s2]; }
    double& at(int s1, int s2) { return v[static_cast<size_t>(s1) * n + s2]; }

    double lower_over(std::uint32_t src_mask, std::uint32_t dst_mask) const;
    /// sup over src of (inf over dst); kInf when some src state reaches none.
    double upper_over(std::uint32_t src_mask, std::uint32_t dst_mask) const;
    /// sup over every (src, dst) pair; kInf when any pair is unreachable.
    /// Uppers built from this bracket singleton queries and survive
    /// propagation, which sup-inf uppers do not.
    double strong_upper_over(std::uint32_t src_mask, std::uint32_t dst_mask) const;
};

struct EnumerationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive path enumeration (cap 10^4 paths); independent of the symbolic
/// propagation machinery, so it can serve as its oracle.
ValuationTable brute_force_valuation(const ToyOperator& op, const ToyUniverse& universe,
                                     long long enumeration_cap = 10000);

/// Exact valuation of the concatenation a . b: optimal split over the shared
/// intermediate state.
ValuationTable compose_tables(const ValuationTable& a, const ValuationTable& b);

/// Exact valuation of the union operator: pointwise minimum.
ValuationTable union_tables(const ValuationTable& a, const ValuationTable& b);

/// Abstract states as explicit subsets (bitmasks) of toy universe states.
class ToyStateSpace : public StateRelations {
public:
    StateId add_state(std::uint32_t mask);
    std::uint32_t mask_of(StateId s) const { return masks_.at(s); }

    bool intersects(StateId a, StateId b) const override {
        return (masks_[a] & masks_[b]) != 0;
    }
    bool subset_of(StateId a, StateId b) const override {
        return (masks_[a] & ~masks_[b]) == 0;
    }
    int state_count() const override { return static_cast<int>(masks_.size()); }

private:
    std::vector<std::uint32_t> masks_;
};

}  // namespace angelic

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclequiv/coeff_quiver.hpp"

namespace cyclequiv {

// A torus fixed point of the quiver Grassmannian: one suffix length per
// segment, 0 <= suffix[s] <= len(s).  The marked set (the last suffix[s]
// points of each segment) is successor closed by construction.
struct FixedPoint {
    std::vector<int> suffix;

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

bool valid_fixed_point(const CoefficientQuiver& cq, const FixedPoint& L);

DimVector fixed_point_dim(const CoefficientQuiver& cq, const FixedPoint& L);

// Marked rows, [v][row-1] in {0,1}.
std::vector<std::vector<char>> marked_rows(const CoefficientQuiver& cq,
                                           const FixedPoint& L);

// The fixed point as a representation: summands U(end_s; suffix_s) over all
// segments with nonzero suffix.
NilpRep fixed_point_rep(const CoefficientQuiver& cq, const FixedPoint& L);

// Streams every suffix tuple with dimension vector e, each exactly once, in
// lexicographic order.  Backtracking prunes on per-vertex budgets.  An
// infeasible e yields an empty stream.
void for_each_fixed_point(const CoefficientQuiver& cq, const DimVector& e,
                          const std::function<void(const FixedPoint&)>& fn);

std::vector<FixedPoint> enumerate_fixed_points(const CoefficientQuiver& cq,
                                               const DimVector& e);

std::uint64_t count_fixed_points(const CoefficientQuiver& cq,
                                 const DimVector& e);

} // namespace cyclequiv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclequiv/fixed_points.hpp"

namespace cyclequiv {

// Dimension of the attracting cell of L, by instantiating the parameters of
// the attracting set and the two equation families that cut it out, then
// eliminating from the segment end points backwards and counting the free
// parameters.  Throws EliminationOrderViolated if a parameter would be
// pivoted twice (a bug tripwire, never expected).
long long cell_dim_elim(const CoefficientQuiver& cq, const TorusGrading& g,
                        const FixedPoint& L);

// Independent cross-check: the number of weight-positive basis morphisms of
// Hom(L, M/L), where every basis morphism between two segment pieces carries
// the constant weight difference of its matched points.
long long cell_dim_tangent(const CoefficientQuiver& cq, const TorusGrading& g,
                           const FixedPoint& L);

struct PoincarePolynomial {
    std::vector<std::uint64_t> coeffs; // coeffs[d] = number of cells of dim d

    int degree() const {
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            if (coeffs[i] != 0) return i;
        return 0;
    }
    std::uint64_t eval(std::uint64_t q) const;
    std::uint64_t total() const; // evaluation at 1
    std::string str() const;     // "1 + 2q + 5q^2 + ..."

    friend bool operator==(const PoincarePolynomial&,
                           const PoincarePolynomial&) = default;
};

struct Cell {
    FixedPoint point;
    long long dim = 0;
};

// All cells with their dimensions; enumeration order, dimensions via
// cell_dim_elim.  Cell dimensions for distinct fixed points are independent
// and are computed in parallel when threads > 1.
std::vector<Cell> cell_decomposition(const CoefficientQuiver& cq,
                                     const DimVector& e, int threads = 1);

PoincarePolynomial poincare_polynomial(const CoefficientQuiver& cq,
                                       const DimVector& e, int threads = 1);

// Number of torus fixed points; equals the Poincare polynomial at 1.
std::uint64_t euler_characteristic(const CoefficientQuiver& cq,
                                   const DimVector& e);

} // namespace cyclequiv

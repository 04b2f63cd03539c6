#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclequiv/dellac.hpp"
#include "cyclequiv/rep.hpp"

namespace cyclequiv {

enum class FlagKind { FullDegenerate, Partial, Custom };

// A finite flag-variety approximation: the ambient representation together
// with the subspace dimension vector.
struct FlagApprox {
    int n = 0;
    int omega = 0;
    FlagKind kind = FlagKind::Custom;
    CorankTuple corank; // meaningful for kind == Partial
    NilpRep rep;
    DimVector e;
};

// Full degeneration: two summands U(i; omega*n) per end vertex i,
// e = (omega*n, ..., omega*n).
FlagApprox build_degenerate_flag_rep(int n, int omega);

// Partial degeneration for a corank tuple c: per vertex i, two summands
// U(i; omega*n) when c_i = 2 or a single U(i; 2*omega*n) when c_i = 1.
FlagApprox build_partial_degeneration(int n, int omega, const CorankTuple& c);

// Any nilpotent representation with a subspace dimension vector; feeds the
// same pipeline.  Throws "dimension mismatch" unless e <= dim rep.
FlagApprox build_custom(const NilpRep& rep, const DimVector& e);

struct ComponentLabel {
    std::vector<int> p;

    friend bool operator==(const ComponentLabel&,
                           const ComponentLabel&) = default;
};

struct Components {
    std::vector<ComponentLabel> labels; // lexicographic in p
    long long dim = 0;                  // common dimension omega*k*(m-k)
    std::vector<long long> d;           // bounds d_i = y_i + x_{i+1}
    long long k = 0;                    // sum x_i
};

// Labels of the irreducible components: all p with 0 <= p_i <= d_i and
// sum p_i = k, where d_i = y_i + x_{i+1}.
Components irreducible_components(const std::vector<long long>& x_mult,
                                  const std::vector<long long>& y_mult,
                                  int omega);

// Flag case only (all d_i = 2, k = n): steps b_i = p_i - 1 in {-1, 0, 1} of a
// grand Motzkin path, a lattice path (0,0) -> (n,0) that may cross the axis.
std::vector<int> grand_motzkin_steps(const ComponentLabel& p);
std::string motzkin_string(const std::vector<int>& steps); // U / F / D

// Exhaustive enumeration of grand Motzkin paths of length n.
std::uint64_t count_grand_motzkin(int n);

// omega * n^2.
long long flag_dimension(int n, int omega);

} // namespace cyclequiv

#pragma once

#include <cstdint>
#include <vector>

#include "cyclequiv/rep.hpp"

namespace cyclequiv {

// Explicit arrow matrices of a nilpotent representation in the segment basis
// of its arranged coefficient quiver.  Entries are in {0,1} with at most one
// 1 per column (each basis point shifts to at most one point).
struct MatrixRep {
    int n = 0;
    std::vector<int> dims;                              // per vertex
    std::vector<std::vector<std::vector<int>>> arrow;   // arrow[v][r'][r]
};

MatrixRep matrix_rep(const NilpRep& rep);

// Default guards; CYCLEQUIV_GUARD_OVERRIDE (integer) raises both.
long long oracle_dim_guard();   // total dimension bound, default 512
long long oracle_count_guard(); // subspace tuple bound, default 10^7

// Brute-force Hom dimension: assembles the linear system
// psi_{i+1} A_i - B_i psi_i = 0 over the rationals and returns its nullity,
// via exact fraction-free elimination.  Guarded by total dimension.
long long hom_dim_matrix(const NilpRep& a, const NilpRep& b);

// Rank of an integer matrix over the rationals (Bareiss, exact).
int rank_bareiss(std::vector<std::vector<long long>> mat);

// Number of k-dimensional subspaces of F_q^m.
std::uint64_t gaussian_binomial(int m, int k, int q);

// Exact number of F_q points of Gr_e(rep): enumerates row-echelon
// representatives of all subspace tuples and filters by A_i V_i <= V_{i+1}.
// q in {2,3,4,5}; guarded by the product of per-vertex subspace counts.
std::uint64_t count_points_fq(const NilpRep& rep, const DimVector& e, int q);

} // namespace cyclequiv

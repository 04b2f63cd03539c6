#pragma once

#include "cyclequiv/rep.hpp"

namespace cyclequiv {

// dim Hom(U_i(l), U_j(k)) by word combinatorics:
//   [U_i(l), U_j(k)] = min{ r_i(w_j(k)), r_{j+k-1}(w_i(l)) } = r_{j+k-1}(w_i(m))
// with m = min{l, k}.  Both routes are computed and checked against each
// other.  Zero-length inputs give 0.
long long hom_dim_indec(const IndecNilp& a, const IndecNilp& b, int n);

// Bilinear extension over summands.
long long hom_dim(const NilpRep& a, const NilpRep& b);

// [M, U_i(N)] = e_{i+N-1} for any M whose summands have length <= N.
// `start` is the start vertex i of U_i(N).  Throws std::invalid_argument
// "summand exceeds nilpotency bound" when the precondition fails.
long long top_hom_dim(const NilpRep& m, int start, int bound);

// dim of the isomorphism stratum of u inside Gr(m): [u,m] - [u,u].
// Realizability of u as a subrepresentation of m is the caller's problem;
// no check is performed.
long long stratum_dim(const NilpRep& u, const NilpRep& m);

// One gluing move: pick the first admissible pair of non-maximal summands in
// lexicographic (end, len) order, overlap their words maximally and replace
// them by the concatenation plus the overlap.  Preserves the dimension
// vector and strictly decreases [u,u].  Requires a homogeneous dimension
// vector, all lengths <= bound, bound a multiple of n and at least one
// summand of length < bound ("already maximal" otherwise).
NilpRep glue_step(const NilpRep& u, int bound);

// Iterate glue_step until every summand has length == bound.
NilpRep glue_to_max(const NilpRep& u, int bound, int* steps = nullptr);

// dim Gr = omega * k * (m - k) with k = sum x_i, m = sum (x_i + y_i), for the
// Grassmannian of subrepresentations of (+) P_i^x_i (+) I_j^y_j with
// e = dim of the projective part, at nilpotency bound omega * n.
long long grassmannian_dim(const std::vector<long long>& x_mult,
                           const std::vector<long long>& y_mult, int omega);

} // namespace cyclequiv

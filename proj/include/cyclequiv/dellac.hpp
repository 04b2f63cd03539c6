#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyclequiv/fixed_points.hpp"
#include "cyclequiv/rep.hpp"

namespace cyclequiv {

// One row of an affine Dellac configuration: the column (1..n) holding the
// entry and the entry value k in {0, ..., omega}.
struct DellacRow {
    int col = 1;
    int k = 0;

    friend bool operator==(const DellacRow&, const DellacRow&) = default;
};

// 2n rows of boxes on a cylinder of n columns with a staircase separator.
// Rows are numbered 1..2n top-down.  Rows j and j+n (j in [n]) carry the two
// segment slots of end vertex e_j; the entry column is the start vertex of
// the encoded segment, and a zero entry sits at the start column of the empty
// segment, (e_j mod n) + 1.
struct AffineDellacConfig {
    int n = 0;
    int omega = 0;
    std::vector<DellacRow> rows;

    friend bool operator==(const AffineDellacConfig&,
                           const AffineDellacConfig&) = default;
};

// Per-vertex degeneration degree in {1, 2}: (2,...,2) is the full
// degeneration, (1,...,1) the non-degenerate flag.
struct CorankTuple {
    std::vector<int> c;

    friend bool operator==(const CorankTuple&, const CorankTuple&) = default;
};

// Separator boundary of row j (boundary 0 is identified with boundary n on
// the cylinder): sigma_j = (n - j) mod n.
int separator_boundary(int j, int n);

// End vertex carried by rows j and j+n, displayed 1..n: sigma_j with 0 -> n.
int end_vertex_of_row(int j, int n);

// Steps from the entry of row j leftwards ... equivalently the number of
// boxes from the entry box rightwards to the separator: 0 when k_j = 0, else
// ((sigma_j - c_j) mod n) + 1.
int p_of_row(const AffineDellacConfig& cfg, int j);

// Encoded segment length of row j: p_j + n * max(k_j - 1, 0).
int length_of_row(const AffineDellacConfig& cfg, int j);

struct ValidationResult {
    bool ok = false;
    std::string reason; // first violated condition when !ok
};

// Checks, in order: entry ranges, two entries per column, zero entries at
// their forced column, row lengths at most omega*n, and the sum condition
// sum_j (p_j + n r_j) = omega n^2.  Structurally malformed input (wrong row
// count, column out of range) throws "malformed configuration".
ValidationResult validate(const AffineDellacConfig& cfg);

// Row-by-row segment lengths l_j = p_j + n r_j.  Throws on invalid configs.
std::vector<int> to_length_tuple(const AffineDellacConfig& cfg);

// Inverse of to_length_tuple: k_j = ceil(l/n), p_j = l - n r_j, column from
// the separator.  Throws "not a cell" unless the lengths are at most omega*n
// and their dimension vectors sum to (omega n, ..., omega n).
AffineDellacConfig from_length_tuple(int n, int omega,
                                     const std::vector<int>& lengths_by_row);

// Streams every valid configuration, lexicographic in (k_j, c_j) row-major.
void for_each_config(int n, int omega,
                     const std::function<void(const AffineDellacConfig&)>& fn);

std::vector<AffineDellacConfig> enumerate_configs(int n, int omega);

// c-degeneracy: for each first-block row j whose end vertex has corank 1,
// a nonzero entry forces the partner row j+n to carry k = omega at p = n.
bool is_c_degenerate(const AffineDellacConfig& cfg, const CorankTuple& c);

std::vector<AffineDellacConfig> enumerate_c_degenerate(int n, int omega,
                                                       const CorankTuple& c);

// Fills each row with k_j on the p_j boxes from the entry rightwards to the
// separator and r_j elsewhere, then sums the rows columnwise.  Valid
// configurations produce (omega n, ..., omega n).
DimVector row_fill_dim_vector(const AffineDellacConfig& cfg);

// Row <-> segment glue for the degenerate flag coefficient quiver (two
// length-omega*n segments per end vertex): row j maps to the slot-(j<=n ? 0
// : 1) segment ending at e_j.
FixedPoint fixed_point_from_row_lengths(const CoefficientQuiver& flag_cq,
                                        const std::vector<int>& lengths);
std::vector<int> row_lengths_from_fixed_point(const CoefficientQuiver& flag_cq,
                                              const FixedPoint& L);

} // namespace cyclequiv

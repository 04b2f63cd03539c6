#pragma once

#include <vector>

#include "cyclequiv/rep.hpp"

namespace cyclequiv {

// One segment of the coefficient quiver: the chain of basis points realizing
// one indecomposable summand.  row[s] is the 1-based row of the point at
// distance s from the end, which sits over vertex (end - s) mod n.  Arrows
// run from step s to step s-1.
struct Segment {
    int end = 0;
    int len = 0;
    std::vector<int> row;
};

struct PointRef {
    int seg = -1;
    int step = -1;
};

// The arranged coefficient quiver of a nilpotent representation.  Over each
// vertex i the d_i segment ends occupy the last d_i rows, ordered long to
// short; continuing segments always take the highest free rows, so segments
// never cross.  Segments are listed by (end asc, len desc, insertion order).
class CoefficientQuiver {
  public:
    int n = 0;
    std::vector<int> m; // points per vertex
    std::vector<int> d; // segment ends per vertex
    std::vector<Segment> segments;
    std::vector<std::vector<PointRef>> point_at; // [v][row-1]

    int vertex_of(int seg, int step) const {
        return mod_n(segments[seg].end - step, n);
    }
    // Arrow out of (v, row): exists unless the point is a segment end.
    bool has_next(int v, int row) const {
        return point_at[v][row - 1].step > 0;
    }
    int next_row(int v, int row) const {
        const PointRef p = point_at[v][row - 1];
        return segments[p.seg].row[p.step - 1];
    }
    // Arrow into (v, row): exists unless the point is a segment start.
    bool has_prev(int v, int row) const {
        const PointRef p = point_at[v][row - 1];
        return p.step + 1 < segments[p.seg].len;
    }
    int prev_row(int v, int row) const {
        const PointRef p = point_at[v][row - 1];
        return segments[p.seg].row[p.step + 1];
    }
};

// Builds the arranged coefficient quiver.  Throws on an empty representation.
CoefficientQuiver arrange(const NilpRep& rep);

// Torus weights per point; weight[v][row-1].  Along every arrow out of
// vertex v the weight increases by exactly d_v, and within each vertex
// column the weights strictly increase with the row index.
struct TorusGrading {
    std::vector<std::vector<long long>> weight;
};

TorusGrading grading(const CoefficientQuiver& cq);

} // namespace cyclequiv

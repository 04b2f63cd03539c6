#include "cyclequiv/coeff_quiver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclequiv {

/*
  Arrangement of the segments.

  Rows over each vertex are filled from the bottom up in blocks indexed by
  the distance s to the segment end:

    s = 0   the d_v segment ends over v occupy rows m_v - d_v + 1 .. m_v,
            ordered long to short (the longest ends in the topmost row of the
            block, the shortest in row m_v);
    s >= 1  the segments ending over vertex v+s with length > s pass over v;
            they take the highest rows still free, keeping their package
            order.

  Since two segments sharing two consecutive vertices sit in blocks whose
  distance indices differ by the same amount over both vertices, relative row
  order is preserved along arrows and segments never cross.
*/
CoefficientQuiver arrange(const NilpRep& rep) {
    if (rep.empty()) throw std::invalid_argument("empty representation");
    const int n = rep.n();

    CoefficientQuiver cq;
    cq.n = n;

    // Package order: end ascending, long to short, insertion order on ties.
    std::vector<IndecNilp> inst = rep.instances();
    std::stable_sort(inst.begin(), inst.end(),
                     [](const IndecNilp& a, const IndecNilp& b) {
                         if (a.end != b.end) return a.end < b.end;
                         return a.len > b.len;
                     });

    cq.m.assign(n, 0);
    cq.d.assign(n, 0);
    const DimVector dims = rep.dim_vector();
    for (int v = 0; v < n; ++v) cq.m[v] = static_cast<int>(dims[v]);

    cq.segments.reserve(inst.size());
    for (const auto& u : inst) {
        cq.segments.push_back(Segment{u.end, u.len, std::vector<int>(u.len, 0)});
        ++cq.d[u.end];
    }

    // Indices of each vertex's package, in package order.
    std::vector<std::vector<int>> package(n);
    for (int s = 0; s < static_cast<int>(cq.segments.size()); ++s)
        package[cq.segments[s].end].push_back(s);

    std::vector<int> nextfree(n);
    for (int v = 0; v < n; ++v) {
        const int q = cq.m[v] - cq.d[v];
        int row = q + 1;
        for (int s : package[v]) cq.segments[s].row[0] = row++;
        nextfree[v] = q;
    }

    const int maxlen = rep.max_len();
    for (int s = 1; s < maxlen; ++s) {
        for (int v = 0; v < n; ++v) {
            const int pkg = mod_n(static_cast<long long>(v) + s, n);
            int size = 0;
            for (int idx : package[pkg])
                if (cq.segments[idx].len > s) ++size;
            if (size == 0) continue;
            int row = nextfree[v] - size + 1;
            for (int idx : package[pkg])
                if (cq.segments[idx].len > s) cq.segments[idx].row[s] = row++;
            nextfree[v] -= size;
        }
    }
    for (int v = 0; v < n; ++v) assert(nextfree[v] == 0);

    cq.point_at.assign(n, {});
    for (int v = 0; v < n; ++v) cq.point_at[v].assign(cq.m[v], PointRef{});
    for (int s = 0; s < static_cast<int>(cq.segments.size()); ++s) {
        const Segment& seg = cq.segments[s];
        for (int step = 0; step < seg.len; ++step) {
            const int v = cq.vertex_of(s, step);
            PointRef& p = cq.point_at[v][seg.row[step] - 1];
            assert(p.seg == -1);
            p = PointRef{s, step};
        }
    }
    return cq;
}

/*
  Torus grading.

  Along the arrow out of vertex v every weight grows by d_v.  The absolute
  level is fixed by giving weight one to the top-left point: with N the
  largest segment length, i0 the vertex with the most length-N ends (smallest
  residue on ties) and j0 = i0 - N + 1, the first basis point over j0 is the
  starting point of such a segment and receives weight one.  Chasing that
  segment to its end and shifting across the end blocks gives every end point
  over vertex v, in row q_v + t, the weight k + t + d_{v,1} - d_v, where k is
  the weight of the lowest point of a non-trivial segment over i0 (k = 0 when
  every segment is a single point).  All remaining weights follow the arrows
  backwards.
*/
TorusGrading grading(const CoefficientQuiver& cq) {
    const int n = cq.n;
    if (cq.segments.empty()) throw std::invalid_argument("empty quiver");

    int bigN = 0;
    for (const auto& s : cq.segments) bigN = std::max(bigN, s.len);

    // d_{v,len} counts
    std::vector<int> d_top(n, 0), d_one(n, 0);
    for (const auto& s : cq.segments) {
        if (s.len == bigN) ++d_top[s.end];
        if (s.len == 1) ++d_one[s.end];
    }
    int i0 = 0;
    for (int v = 1; v < n; ++v)
        if (d_top[v] > d_top[i0]) i0 = v;

    long long k = 0;
    if (cq.m[i0] - d_one[i0] > 0) {
        const int j0 = mod_n(static_cast<long long>(i0) - bigN + 1, n);
        long long w = 1;
        for (int t = 0; t <= bigN - 2; ++t)
            w += cq.d[mod_n(static_cast<long long>(j0) + t, n)];
        k = w + (cq.d[i0] - d_one[i0]) - 1;
    }

    TorusGrading g;
    g.weight.assign(n, {});
    for (int v = 0; v < n; ++v) g.weight[v].assign(cq.m[v], 0);

    for (int v = 0; v < n; ++v) {
        const int q = cq.m[v] - cq.d[v];
        for (int t = 1; t <= cq.d[v]; ++t)
            g.weight[v][q + t - 1] = k + t + d_one[v] - cq.d[v];
    }
    for (std::size_t s = 0; s < cq.segments.size(); ++s) {
        const Segment& seg = cq.segments[s];
        long long w = g.weight[seg.end][seg.row[0] - 1];
        for (int step = 1; step < seg.len; ++step) {
            const int v = cq.vertex_of(static_cast<int>(s), step);
            w -= cq.d[v];
            g.weight[v][seg.row[step] - 1] = w;
        }
    }

#ifndef NDEBUG
    for (int v = 0; v < n; ++v)
        for (int r = 1; r < cq.m[v]; ++r)
            assert(g.weight[v][r - 1] < g.weight[v][r]);
    for (int v = 0; v < n; ++v)
        for (int r = 1; r <= cq.m[v]; ++r)
            if (cq.has_next(v, r)) {
                const int v1 = mod_n(v + 1, n);
                assert(g.weight[v1][cq.next_row(v, r) - 1] ==
                       g.weight[v][r - 1] + cq.d[v]);
            }
#endif
    return g;
}

} // namespace cyclequiv

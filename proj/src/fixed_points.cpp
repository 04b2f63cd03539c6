#include "cyclequiv/fixed_points.hpp"

#include <cassert>
#include <stdexcept>

namespace cyclequiv {

bool valid_fixed_point(const CoefficientQuiver& cq, const FixedPoint& L) {
    if (L.suffix.size() != cq.segments.size()) return false;
    for (std::size_t s = 0; s < cq.segments.size(); ++s)
        if (L.suffix[s] < 0 || L.suffix[s] > cq.segments[s].len) return false;
    return true;
}

DimVector fixed_point_dim(const CoefficientQuiver& cq, const FixedPoint& L) {
    if (!valid_fixed_point(cq, L))
        throw std::invalid_argument("invalid fixed point");
    DimVector d(cq.n);
    for (std::size_t s = 0; s < cq.segments.size(); ++s)
        for (int step = 0; step < L.suffix[s]; ++step)
            ++d[cq.vertex_of(static_cast<int>(s), step)];
    return d;
}

std::vector<std::vector<char>> marked_rows(const CoefficientQuiver& cq,
                                           const FixedPoint& L) {
    if (!valid_fixed_point(cq, L))
        throw std::invalid_argument("invalid fixed point");
    std::vector<std::vector<char>> marked(cq.n);
    for (int v = 0; v < cq.n; ++v) marked[v].assign(cq.m[v], 0);
    for (std::size_t s = 0; s < cq.segments.size(); ++s)
        for (int step = 0; step < L.suffix[s]; ++step) {
            const int v = cq.vertex_of(static_cast<int>(s), step);
            marked[v][cq.segments[s].row[step] - 1] = 1;
        }
    return marked;
}

NilpRep fixed_point_rep(const CoefficientQuiver& cq, const FixedPoint& L) {
    if (!valid_fixed_point(cq, L))
        throw std::invalid_argument("invalid fixed point");
    NilpRep rep(cq.n);
    for (std::size_t s = 0; s < cq.segments.size(); ++s)
        if (L.suffix[s] > 0)
            rep.add(IndecNilp{cq.segments[s].end, L.suffix[s]});
    return rep;
}

void for_each_fixed_point(const CoefficientQuiver& cq, const DimVector& e,
                          const std::function<void(const FixedPoint&)>& fn) {
    const int n = cq.n;
    if (e.n() != n) throw std::invalid_argument("dimension vector size");
    for (int v = 0; v < n; ++v)
        if (e[v] < 0 || e[v] > cq.m[v]) return;

    const int S = static_cast<int>(cq.segments.size());

    // maxrem[i][v]: points over v contributed by segments i.. at full suffix.
    std::vector<std::vector<long long>> maxrem(S + 1,
                                               std::vector<long long>(n, 0));
    for (int i = S - 1; i >= 0; --i) {
        maxrem[i] = maxrem[i + 1];
        for (int step = 0; step < cq.segments[i].len; ++step)
            ++maxrem[i][cq.vertex_of(i, step)];
    }

    FixedPoint L;
    L.suffix.assign(S, 0);
    std::vector<long long> used(n, 0);

    const std::function<void(int)> dfs = [&](int i) {
        for (int v = 0; v < n; ++v)
            if (used[v] > e[v] || used[v] + maxrem[i][v] < e[v]) return;
        if (i == S) {
            fn(L);
            return;
        }
        // suffix 0, then one point at a time
        dfs(i + 1);
        const Segment& seg = cq.segments[i];
        for (int s = 1; s <= seg.len; ++s) {
            ++used[cq.vertex_of(i, s - 1)];
            L.suffix[i] = s;
            dfs(i + 1);
        }
        for (int s = 0; s < seg.len; ++s) --used[cq.vertex_of(i, s)];
        L.suffix[i] = 0;
    };
    dfs(0);
}

std::vector<FixedPoint> enumerate_fixed_points(const CoefficientQuiver& cq,
                                               const DimVector& e) {
    std::vector<FixedPoint> out;
    for_each_fixed_point(cq, e, [&](const FixedPoint& L) { out.push_back(L); });
    return out;
}

std::uint64_t count_fixed_points(const CoefficientQuiver& cq,
                                 const DimVector& e) {
    std::uint64_t c = 0;
    for_each_fixed_point(cq, e, [&](const FixedPoint&) { ++c; });
    return c;
}

} // namespace cyclequiv

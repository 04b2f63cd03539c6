#include "cyclequiv/cells.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclequiv/errors.hpp"

namespace cyclequiv {

/*
  Attracting-cell dimension by parameter elimination.

  The attracting set of L is cut out of the product of ordinary Grassmannians
  by the arrow conditions.  With K_v the marked rows over vertex v, a point of
  the attracting set has generators

      w_k = v_k + sum_{l > k, l not in K_v} mu_{l,k} v_l   for k in K_v,

  so the parameters are the triples (v, l, k).  Pushing a generator across the
  arrow v -> v+1 produces one equation per marked k with a live arrow (image
  k' = next(k), which lies in K_{v+1} by successor closure) and per row
  y > k' over v+1 outside K_{v+1}:

    family 1 (y has a live preimage j > k over v):
        mu_{j,k} = mu_{y,k'} + products of later parameters,
    family 2 (no such preimage; y is fed by nothing above k):
        0 = mu_{y,k'} + products of later parameters.

  Eliminating from the segment end points backwards, each equation pivots on
  mu_{y,k'} -- the parameter whose generator index k' sits one step closer to
  its segment end.  The two families cover complementary cases of y, so every
  pivot is hit exactly once and the cell dimension is the number of
  parameters minus the number of equations.
*/
long long cell_dim_elim(const CoefficientQuiver& cq, const TorusGrading& g,
                        const FixedPoint& L) {
    if (static_cast<int>(g.weight.size()) != cq.n)
        throw std::invalid_argument("grading does not match quiver");
    const auto marked = marked_rows(cq, L);
    const int n = cq.n;

    long long params = 0;
    for (int v = 0; v < n; ++v)
        for (int k = 1; k <= cq.m[v]; ++k) {
            if (!marked[v][k - 1]) continue;
            for (int l = k + 1; l <= cq.m[v]; ++l)
                if (!marked[v][l - 1]) ++params;
        }

    long long eliminated = 0;
    std::set<std::tuple<int, int, int>> pivoted;
    for (int v = 0; v < n; ++v) {
        const int v1 = mod_n(v + 1, n);
        for (int k = 1; k <= cq.m[v]; ++k) {
            if (!marked[v][k - 1] || !cq.has_next(v, k)) continue;
            const int kp = cq.next_row(v, k);
            if (!marked[v1][kp - 1])
                throw EliminationOrderViolated("successor closure violated");
            for (int y = kp + 1; y <= cq.m[v1]; ++y) {
                if (marked[v1][y - 1]) continue;
                const bool live_preimage =
                    cq.has_prev(v1, y) && cq.prev_row(v1, y) > k;
                // family 1 when y has a live preimage above k, family 2
                // otherwise; both pivot the parameter (v1, y, kp).
                (void)live_preimage;
                if (!pivoted.insert({v1, y, kp}).second)
                    throw EliminationOrderViolated(
                        "parameter determined twice");
                ++eliminated;
            }
        }
    }
    return params - eliminated;
}

namespace {

struct Piece {
    int end = 0;
    int len = 0;
    std::vector<long long> wt; // by step (distance from the piece end)
};

} // namespace

long long cell_dim_tangent(const CoefficientQuiver& cq, const TorusGrading& g,
                           const FixedPoint& L) {
    if (!valid_fixed_point(cq, L))
        throw std::invalid_argument("invalid fixed point");
    const int n = cq.n;

    std::vector<Piece> sub, quot;
    for (std::size_t s = 0; s < cq.segments.size(); ++s) {
        const Segment& seg = cq.segments[s];
        const int suf = L.suffix[s];
        if (suf > 0) {
            Piece p{seg.end, suf, {}};
            for (int step = 0; step < suf; ++step)
                p.wt.push_back(
                    g.weight[cq.vertex_of(static_cast<int>(s), step)]
                            [seg.row[step] - 1]);
            sub.push_back(std::move(p));
        }
        if (suf < seg.len) {
            Piece p{mod_n(seg.end - suf, n), seg.len - suf, {}};
            for (int step = suf; step < seg.len; ++step)
                p.wt.push_back(
                    g.weight[cq.vertex_of(static_cast<int>(s), step)]
                            [seg.row[step] - 1]);
            quot.push_back(std::move(p));
        }
    }

    // Basis morphisms between segment pieces are matchings p_u -> q_{u-c}
    // for offsets c = (end_src - end_tgt) mod n with
    // max(0, len_src - len_tgt) <= c <= len_src - 1.  Each carries the
    // constant weight difference of its matched points; the attracting side
    // counts the weight-positive ones.
    long long count = 0;
    for (const Piece& P : sub)
        for (const Piece& Q : quot) {
            const int cmin = std::max(0, P.len - Q.len);
            int c = cmin + mod_n(static_cast<long long>(P.end) - Q.end - cmin, n);
            for (; c <= P.len - 1; c += n) {
                const long long delta = Q.wt[0] - P.wt[c];
#ifndef NDEBUG
                for (int u = c; u < P.len && u - c < Q.len; ++u)
                    assert(Q.wt[u - c] - P.wt[u] == delta);
#endif
                if (delta > 0) ++count;
            }
        }
    return count;
}

std::uint64_t PoincarePolynomial::eval(std::uint64_t q) const {
    std::uint64_t acc = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        acc = acc * q + coeffs[i];
    return acc;
}

std::uint64_t PoincarePolynomial::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : coeffs) t += c;
    return t;
}

std::string PoincarePolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0)
            os << coeffs[d];
        else {
            if (coeffs[d] != 1) os << coeffs[d];
            os << 'q';
            if (d > 1) os << '^' << d;
        }
    }
    if (first) os << '0';
    return os.str();
}

std::vector<Cell> cell_decomposition(const CoefficientQuiver& cq,
                                     const DimVector& e, int threads) {
    const TorusGrading g = grading(cq);
    std::vector<FixedPoint> fps = enumerate_fixed_points(cq, e);
    std::vector<Cell> cells(fps.size());
    for (std::size_t i = 0; i < fps.size(); ++i)
        cells[i].point = std::move(fps[i]);

    const auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            cells[i].dim = cell_dim_elim(cq, g, cells[i].point);
    };
    if (threads <= 1 || cells.size() < 2) {
        work(0, cells.size());
    } else {
        const std::size_t t =
            std::min<std::size_t>(threads, cells.size());
        std::vector<std::thread> pool;
        const std::size_t chunk = (cells.size() + t - 1) / t;
        for (std::size_t j = 0; j < t; ++j) {
            const std::size_t lo = j * chunk;
            const std::size_t hi = std::min(cells.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return cells;
}

PoincarePolynomial poincare_polynomial(const CoefficientQuiver& cq,
                                       const DimVector& e, int threads) {
    const std::vector<Cell> cells = cell_decomposition(cq, e, threads);
    PoincarePolynomial p;
    for (const Cell& c : cells) {
        if (c.dim < 0) throw std::logic_error("negative cell dimension");
        if (static_cast<std::size_t>(c.dim) >= p.coeffs.size())
            p.coeffs.resize(c.dim + 1, 0);
        ++p.coeffs[c.dim];
    }
    if (p.coeffs.empty()) p.coeffs.push_back(0);
    return p;
}

std::uint64_t euler_characteristic(const CoefficientQuiver& cq,
                                   const DimVector& e) {
    return count_fixed_points(cq, e);
}

} // namespace cyclequiv

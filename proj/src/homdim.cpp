#include "cyclequiv/homdim.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclequiv {

namespace {

long long direct_count(const Word& w, int v, int n) {
    long long c = 0;
    for (int t = 0; t < w.len; ++t)
        if (mod_n(static_cast<long long>(w.start) + t, n) == v) ++c;
    return c;
}

} // namespace

long long hom_dim_indec(const IndecNilp& a, const IndecNilp& b, int n) {
    if (a.len == 0 || b.len == 0) return 0;
    const int m = std::min(a.len, b.len);
    const int i = start_vertex(a, n);
    const long long r = repetitions(Word{i, m}, b.end, n);
    // The two formulas of the word computation must coincide.
    const long long lhs =
        std::min(repetitions(word_of(b, n), i, n),
                 repetitions(word_of(a, n), b.end, n));
    assert(lhs == r);
    (void)lhs;
    return r;
}

long long hom_dim(const NilpRep& a, const NilpRep& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("representations over different quivers");
    long long total = 0;
    for (const auto& sa : a.summands())
        for (const auto& sb : b.summands())
            total += sa.mult * sb.mult *
                     hom_dim_indec(IndecNilp{sa.end, sa.len},
                                   IndecNilp{sb.end, sb.len}, a.n());
    return total;
}

long long top_hom_dim(const NilpRep& m, int start, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    if (m.max_len() > bound)
        throw std::invalid_argument("summand exceeds nilpotency bound");
    const long long result =
        m.dim_vector()[mod_n(static_cast<long long>(start) + bound - 1, m.n())];
#ifndef NDEBUG
    NilpRep top(m.n());
    top.add(from_start_label(start, bound, m.n()));
    assert(m.empty() || result == hom_dim(m, top));
#endif
    return result;
}

long long stratum_dim(const NilpRep& u, const NilpRep& m) {
    return hom_dim(u, m) - hom_dim(u, u);
}

/*
  One gluing move.  Write the two chosen summands as words w_i(l) = w1 w2 and
  w_j(k) = w2 w3 with a common overlap w2 (a suffix of the first, a prefix of
  the second, possibly empty), and replace them by the concatenation w1 w2 w3
  together with the overlap w2.  The move keeps the dimension vector, stays
  inside the same Grassmannian and strictly decreases the self-Hom dimension.

  Overlap lengths o must satisfy o = (l - t) mod n with t = (j - i) mod n.
  Nontrivial moves need o < min(l, k); the concatenation has l + k - o
  letters, so o >= l + k - bound keeps it within the nilpotency bound.  The
  largest admissible o is taken, and pairs are scanned in lexicographic
  (end, len) order, so the move is deterministic.
*/
NilpRep glue_step(const NilpRep& u, int bound) {
    const int n = u.n();
    if (bound < 1 || bound % n != 0)
        throw std::invalid_argument("bound must be a positive multiple of n");
    if (!u.dim_vector().homogeneous())
        throw std::invalid_argument("dimension vector not homogeneous");
    if (u.max_len() > bound)
        throw std::invalid_argument("summand exceeds nilpotency bound");

    const std::vector<IndecNilp> inst = u.instances();
    bool any_short = false;
    for (const auto& s : inst) any_short |= (s.len < bound);
    if (!any_short) throw std::invalid_argument("already maximal");

    for (std::size_t ai = 0; ai < inst.size(); ++ai) {
        if (inst[ai].len >= bound) continue;
        for (std::size_t bi = 0; bi < inst.size(); ++bi) {
            if (bi == ai || inst[bi].len >= bound) continue;
            const IndecNilp a = inst[ai];
            const IndecNilp b = inst[bi];
            const int l = a.len, k = b.len;
            const int t = mod_n(start_vertex(b, n) - start_vertex(a, n), n);
            const int omax = std::min(l, k) - 1;
            if (omax < 0) continue;
            int o = omax - mod_n(static_cast<long long>(omax) - (l - t), n);
            const int olow = std::max(0, l + k - bound);
            if (o < olow) continue;

            std::vector<IndecNilp> next;
            next.reserve(inst.size());
            for (std::size_t x = 0; x < inst.size(); ++x)
                if (x != ai && x != bi) next.push_back(inst[x]);
            next.push_back(IndecNilp{b.end, l + k - o});
            if (o > 0) next.push_back(IndecNilp{a.end, o});
            NilpRep result = rep_from_instances(n, next);
            assert(result.dim_vector() == u.dim_vector());
            assert(hom_dim(result, result) < hom_dim(u, u));
            return result;
        }
    }
    throw std::logic_error("no admissible pair");
}

NilpRep glue_to_max(const NilpRep& u, int bound, int* steps) {
    const auto has_short = [bound](const NilpRep& r) {
        for (const auto& s : r.summands())
            if (s.len < bound) return true;
        return false;
    };
    NilpRep cur = u;
    int count = 0;
    while (has_short(cur)) {
        cur = glue_step(cur, bound);
        ++count;
    }
    if (steps) *steps = count;
    return cur;
}

long long grassmannian_dim(const std::vector<long long>& x_mult,
                           const std::vector<long long>& y_mult, int omega) {
    long long k = 0, m = 0;
    for (long long x : x_mult) k += x;
    m = k;
    for (long long y : y_mult) m += y;
    if (m < k) throw std::invalid_argument("negative injective multiplicity");
    return static_cast<long long>(omega) * k * (m - k);
}

} // namespace cyclequiv

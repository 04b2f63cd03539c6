#include "cyclequiv/rep.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclequiv {

IndecNilp from_start_label(int start, int len, int n) {
    return IndecNilp{mod_n(static_cast<long long>(start) + len - 1, n), len};
}

int start_vertex(const IndecNilp& u, int n) {
    return mod_n(static_cast<long long>(u.end) - u.len + 1, n);
}

Word word_of(const IndecNilp& u, int n) {
    if (u.len < 1)
        throw std::invalid_argument("zero representation has no word");
    return Word{start_vertex(u, n), u.len};
}

std::vector<int> letters(const Word& w, int n) {
    std::vector<int> out(w.len);
    for (int t = 0; t < w.len; ++t)
        out[t] = mod_n(static_cast<long long>(w.start) + t, n);
    return out;
}

long long repetitions(const Word& w, int v, int n) {
    const long long base = w.len / n;
    const int rem = w.len % n;
    return base + (mod_n(static_cast<long long>(v) - w.start, n) < rem ? 1 : 0);
}

long long DimVector::sum() const {
    long long s = 0;
    for (long long x : e_) s += x;
    return s;
}

bool DimVector::homogeneous() const {
    for (long long x : e_)
        if (x != e_[0]) return false;
    return true;
}

bool DimVector::dominates(const DimVector& o) const {
    if (n() != o.n()) return false;
    for (int v = 0; v < n(); ++v)
        if (e_[v] < o.e_[v]) return false;
    return true;
}

DimVector& DimVector::operator+=(const DimVector& o) {
    assert(n() == o.n());
    for (int v = 0; v < n(); ++v) e_[v] += o.e_[v];
    return *this;
}

DimVector dim_vector(const IndecNilp& u, int n) {
    DimVector d(n);
    if (u.len == 0) return d;
    const Word w = word_of(u, n);
    for (int v = 0; v < n; ++v) d[v] = repetitions(w, v, n);
    return d;
}

NilpRep::NilpRep(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
}

void NilpRep::add(IndecNilp u, long long mult) {
    if (u.len < 1)
        throw std::invalid_argument("zero-length summand not allowed");
    if (u.end < 0 || u.end >= n_)
        throw std::invalid_argument("end vertex out of range");
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    Summand s{u.end, u.len, mult};
    auto it = std::lower_bound(
        summands_.begin(), summands_.end(), s,
        [](const Summand& a, const Summand& b) {
            return std::pair(a.end, a.len) < std::pair(b.end, b.len);
        });
    if (it != summands_.end() && it->end == s.end && it->len == s.len)
        it->mult += mult;
    else
        summands_.insert(it, s);
}

long long NilpRep::total_dim() const {
    long long t = 0;
    for (const auto& s : summands_) t += static_cast<long long>(s.len) * s.mult;
    return t;
}

int NilpRep::max_len() const {
    int m = 0;
    for (const auto& s : summands_) m = std::max(m, s.len);
    return m;
}

long long NilpRep::summand_count() const {
    long long c = 0;
    for (const auto& s : summands_) c += s.mult;
    return c;
}

DimVector NilpRep::dim_vector() const {
    DimVector d(n_);
    for (const auto& s : summands_) {
        const Word w = word_of(IndecNilp{s.end, s.len}, n_);
        for (int v = 0; v < n_; ++v) d[v] += s.mult * repetitions(w, v, n_);
    }
    return d;
}

std::vector<IndecNilp> NilpRep::instances() const {
    std::vector<IndecNilp> out;
    out.reserve(static_cast<std::size_t>(summand_count()));
    for (const auto& s : summands_)
        for (long long i = 0; i < s.mult; ++i)
            out.push_back(IndecNilp{s.end, s.len});
    return out;
}

NilpRep rep_from_instances(int n, const std::vector<IndecNilp>& instances) {
    NilpRep r(n);
    for (const auto& u : instances) r.add(u);
    return r;
}

} // namespace cyclequiv

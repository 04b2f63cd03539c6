#pragma once

#include <compare>
#include <vector>

#include "cyclequiv/vertex.hpp"

namespace cyclequiv {

// Indecomposable nilpotent representation of the cyclic quiver, labelled by
// its end vertex: U(j; l) occupies the vertices j-l+1, ..., j-1, j (mod n).
// The canonical labelling is the end labelling; from_start_label converts the
// start labelling U_i(l).  len == 0 denotes the zero representation and is
// only allowed inside fixed-point length tuples, never inside a NilpRep.
struct IndecNilp {
    int end = 0; // 0-based end vertex
    int len = 0;

    friend auto operator<=>(const IndecNilp&, const IndecNilp&) = default;
};

IndecNilp from_start_label(int start, int len, int n);
int start_vertex(const IndecNilp& u, int n);

// The word of U_i(l): the letter sequence i, i+1, ..., i+l-1 mod n.
struct Word {
    int start = 0; // 0-based
    int len = 0;
};

// Throws std::invalid_argument when u.len == 0.
Word word_of(const IndecNilp& u, int n);

std::vector<int> letters(const Word& w, int n);

// Number of occurrences of the letter v in w, by the closed form
// floor(len/n) + [ (v - start) mod n < len mod n ].
long long repetitions(const Word& w, int v, int n);

class DimVector {
  public:
    DimVector() = default;
    explicit DimVector(int n) : e_(n, 0) {}
    explicit DimVector(std::vector<long long> e) : e_(std::move(e)) {}

    int n() const { return static_cast<int>(e_.size()); }
    long long& operator[](int v) { return e_[v]; }
    long long operator[](int v) const { return e_[v]; }
    const std::vector<long long>& entries() const { return e_; }

    long long sum() const;
    bool homogeneous() const;
    bool dominates(const DimVector& o) const; // componentwise >=
    DimVector& operator+=(const DimVector& o);

    friend DimVector operator+(DimVector a, const DimVector& b) {
        a += b;
        return a;
    }
    friend bool operator==(const DimVector&, const DimVector&) = default;

  private:
    std::vector<long long> e_;
};

DimVector dim_vector(const IndecNilp& u, int n);

struct Summand {
    int end = 0;
    int len = 0;
    long long mult = 0;

    friend auto operator<=>(const Summand&, const Summand&) = default;
};

// A finite-dimensional nilpotent representation, stored as the multiset of
// its indecomposable summands.  Canonical order is (end, len) ascending with
// merged multiplicities, so multiset equality is plain equality.
class NilpRep {
  public:
    explicit NilpRep(int n);

    int n() const { return n_; }
    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }

    void add(IndecNilp u, long long mult = 1);

    long long total_dim() const;
    int max_len() const; // nilpotence parameter N; 0 when empty
    long long summand_count() const;
    DimVector dim_vector() const;

    // Summands expanded with multiplicity, in canonical (end, len) order.
    std::vector<IndecNilp> instances() const;

    friend bool operator==(const NilpRep&, const NilpRep&) = default;

  private:
    int n_;
    std::vector<Summand> summands_;
};

NilpRep rep_from_instances(int n, const std::vector<IndecNilp>& instances);

} // namespace cyclequiv

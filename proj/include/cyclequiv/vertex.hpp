#pragma once

namespace cyclequiv {

// Vertices and arrows of the cyclic quiver on n vertices are residues mod n.
// They are stored 0-based everywhere in the library; file formats and CLI
// output show them 1-based.
inline int mod_n(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline int to_display(int v) { return v + 1; }
inline int from_display(int v) { return v - 1; }

} // namespace cyclequiv

#pragma once

#include "klrw/rational.hpp"

#include <stdexcept>
#include <utility>

namespace klrw {

// Cyclic quiver with vertices {0,...,e} and arrows i -> i+1 (mod e+1).
// For e = 1 the two arrows 0 -> 1 and 1 -> 0 are parallel edges.
struct Quiver {
    int e = 2;

    explicit Quiver(int e_) : e(e_) {
        if (e < 1) throw std::invalid_argument("quiver needs e >= 1");
    }

    int vertices() const { return e + 1; }

    bool has_arrow(int i, int j) const {
        if (e == 1) return i != j;
        return mod_res(i + 1, vertices()) == mod_res(j, vertices());
    }
};

inline int cartan_pairing(const Quiver& q, int i, int j) {
    const int m = q.vertices();
    i = mod_res(i, m);
    j = mod_res(j, m);
    if (i == j) return 2;
    if (q.e == 1) return -2;
    if (mod_res(i + 1, m) == j || mod_res(j + 1, m) == i) return -1;
    return 0;
}

// Vertex relabeling induced by subdividing the arrow edge -> edge+1: old
// vertices r <= edge keep their name, the rest shift up by one, and the
// inserted vertex takes the label edge+1.
struct RelabelMap {
    int old_vertices = 0;
    int edge = 0;

    int apply(int r) const {
        r = mod_res(r, old_vertices);
        return r <= edge ? r : r + 1;
    }

    int inserted() const { return edge + 1; }

    int inverse(int r) const {
        r = mod_res(r, old_vertices + 1);
        if (r == inserted()) throw std::invalid_argument("inserted vertex has no preimage");
        return r < inserted() ? r : r - 1;
    }
};

inline std::pair<Quiver, RelabelMap> subdivide_quiver(const Quiver& q, int edge) {
    edge = mod_res(edge, q.vertices());
    return {Quiver(q.e + 1), RelabelMap{q.vertices(), edge}};
}

inline int relabel_residue(const RelabelMap& m, int r) { return m.apply(r); }

} // namespace klrw

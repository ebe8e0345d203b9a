#pragma once

#include "klrw/diagram.hpp"
#include "klrw/laurent.hpp"
#include "klrw/loading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace klrw {

// Bijection from the nodes of `shape` onto the coordinate set of the type;
// values stored in canonical node order.
struct Tableau {
    Multipartition shape;
    std::vector<Rat> value;
};

inline std::vector<Rat> coordinate_set(const Multipartition& mp, const AffineData& aff, const Rat& eps) {
    std::vector<Rat> xs;
    for (const Node& n : nodes_of(mp)) xs.push_back(position(n, aff, eps));
    std::sort(xs.begin(), xs.end());
    return xs;
}

inline Tableau canonical_tableau(const Multipartition& mp, const AffineData& aff, const Rat& eps) {
    Tableau t;
    t.shape = mp;
    for (const Node& n : nodes_of(mp)) t.value.push_back(position(n, aff, eps));
    return t;
}

inline Rat tableau_at(const Tableau& t, const Node& n) {
    auto ns = nodes_of(t.shape);
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == n) return t.value[i];
    throw std::invalid_argument("tableau_at: node outside shape");
}

// the three semistandardness conditions, checked with exact rationals
inline bool is_semistandard(const Tableau& t, const Multipartition& mu, const Charge& ch, const AffineData& aff,
                            const Rat& eps) {
    auto ns = nodes_of(t.shape);
    if (ns.size() != t.value.size()) throw std::invalid_argument("is_semistandard: value count mismatch");
    std::vector<Rat> target = coordinate_set(mu, aff, eps);
    std::vector<Rat> got = t.value;
    std::sort(got.begin(), got.end());
    if (got != target) throw std::invalid_argument("is_semistandard: not a bijection onto the type's coordinates");

    std::map<Node, Rat> val;
    for (std::size_t i = 0; i < ns.size(); ++i) val.emplace(ns[i], t.value[i]);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const Node& n = ns[i];
        if (n.r == 1 && n.c == 1 && n.m <= ch.levels() && !(t.value[i] <= Rat(ch.kappa[n.m - 1]))) return false;
        auto above = val.find({n.m, n.r - 1, n.c});
        if (above != val.end() && !(t.value[i] + 1 < above->second)) return false;
        auto left = val.find({n.m, n.r, n.c - 1});
        if (left != val.end() && !(t.value[i] < left->second + 1)) return false;
    }
    return true;
}

// Backtracking over nodes in canonical order; the up and left neighbours
// are already placed, so both local conditions prune immediately.
inline std::vector<Tableau> enumerate_sstd(const Multipartition& lam, const Multipartition& mu, const Charge& ch,
                                           const AffineData& aff, const Rat& eps) {
    auto ns = nodes_of(lam);
    std::vector<Rat> target = coordinate_set(mu, aff, eps);
    if (ns.size() != target.size()) return {};
    std::vector<Tableau> out;
    std::vector<int> pick(ns.size(), -1);
    std::vector<bool> used(target.size(), false);
    std::map<Node, std::size_t> index;
    for (std::size_t i = 0; i < ns.size(); ++i) index[ns[i]] = i;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ns.size()) {
            Tableau t;
            t.shape = lam;
            for (std::size_t j = 0; j < ns.size(); ++j) t.value.push_back(target[pick[j]]);
            out.push_back(std::move(t));
            return;
        }
        const Node& n = ns[i];
        for (std::size_t v = 0; v < target.size(); ++v) {
            if (used[v]) continue;
            const Rat& x = target[v];
            if (n.r == 1 && n.c == 1 && n.m <= ch.levels() && !(x <= Rat(ch.kappa[n.m - 1]))) continue;
            auto above = index.find({n.m, n.r - 1, n.c});
            if (above != index.end() && !(x + 1 < target[pick[above->second]])) continue;
            auto left = index.find({n.m, n.r, n.c - 1});
            if (left != index.end() && !(x < target[pick[left->second]] + 1)) continue;
            used[v] = true;
            pick[i] = static_cast<int>(v);
            self(self, i + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

// independent oracle: filter every bijection
inline long long count_sstd_brute(const Multipartition& lam, const Multipartition& mu, const Charge& ch,
                                  const AffineData& aff, const Rat& eps) {
    auto ns = nodes_of(lam);
    std::vector<Rat> target = coordinate_set(mu, aff, eps);
    if (ns.size() != target.size()) return 0;
    std::vector<int> perm(ns.size());
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        Tableau t;
        t.shape = lam;
        for (std::size_t i = 0; i < ns.size(); ++i) t.value.push_back(target[perm[i]]);
        if (is_semistandard(t, mu, ch, aff, eps)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// w_T, as a permutation of sorted coordinate ranks
inline std::vector<int> tableau_permutation(const Tableau& t, const AffineData& aff, const Rat& eps) {
    auto ns = nodes_of(t.shape);
    std::vector<Rat> lam_sorted = coordinate_set(t.shape, aff, eps);
    std::vector<Rat> mu_sorted = t.value;
    std::sort(mu_sorted.begin(), mu_sorted.end());
    std::vector<int> w(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Rat x = position(ns[i], aff, eps);
        std::size_t k = std::lower_bound(lam_sorted.begin(), lam_sorted.end(), x) - lam_sorted.begin();
        std::size_t tk = std::lower_bound(mu_sorted.begin(), mu_sorted.end(), t.value[i]) - mu_sorted.begin();
        w[k] = static_cast<int>(tk);
    }
    return w;
}

// D_T: bottom is the idempotent loading of the shape, the top places the
// shape's residues at the type's coordinates.
inline StraightDiagram tableau_diagram(const Tableau& t, const Charge& ch, const Quiver& q) {
    const int eprime = q.vertices();
    AffineData aff = affine_extend(ch, t.shape.size(), eprime);
    Rat eps = default_eps(aff);
    Loading bottom = idempotent_loading(t.shape, ch, q);

    Loading top;
    top.vertices = eprime;
    auto ns = nodes_of(t.shape);
    std::map<int, int> match;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        int res = residue(ns[i], ch.rho[ns[i].m - 1], eprime);
        int group = static_cast<int>(i);
        top.strings.push_back({Kind::Solid, res, t.value[i], group, {Origin::FromNode, ns[i], 0}});
        top.strings.push_back({Kind::Ghost, res, t.value[i] + 1, group, {Origin::FromNode, ns[i], 0}});
        match[group] = group; // groups are the canonical node index on both sides
    }
    for (int m = 1; m <= ch.levels(); ++m)
        top.strings.push_back(
            {Kind::Red, mod_res(ch.rho[m - 1], eprime), Rat(ch.kappa[m - 1]), -1, {Origin::FromRed, Node{}, m}});
    top.sort_by_x();
    top.validate_distinct();
    return straight_diagram(std::move(bottom), std::move(top), std::move(match));
}

inline long long tableau_degree(const Tableau& t, const Charge& ch, const Quiver& q) {
    return degree(tableau_diagram(t, ch, q), q);
}

// cyclotomic graded dimension: sum of q^(deg T) over semistandard tableaux
// of every type in Parts
inline Laurent graded_cell_dim(const Multipartition& lam, const Charge& ch, const Quiver& q) {
    const int eprime = q.vertices();
    AffineData aff = affine_extend(ch, lam.size(), eprime);
    Rat eps = default_eps(aff);
    Laurent dim;
    for (const Multipartition& mu : multipartitions_of(lam.size(), lam.levels()))
        for (const Tableau& t : enumerate_sstd(lam, mu, ch, aff, eps))
            dim.add_term(static_cast<int>(tableau_degree(t, ch, q)), 1);
    return dim;
}

// sorted-coordinate dominance; a bijection with c(a) <= c(d(a)) exists iff
// the sorted sequences compare entrywise
inline bool dominates(const Multipartition& lam, const Multipartition& mu, const Charge& ch, int eprime) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominates: sizes differ");
    int n = lam.size();
    AffineData aff = affine_extend(ch, n, eprime);
    Rat eps = default_eps(aff);
    std::vector<Rat> a = coordinate_set(lam, aff, eps);
    std::vector<Rat> b = coordinate_set(mu, aff, eps);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

inline bool dominates_brute(const Multipartition& lam, const Multipartition& mu, const Charge& ch, int eprime) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominates_brute: sizes differ");
    AffineData aff = affine_extend(ch, lam.size(), eprime);
    Rat eps = default_eps(aff);
    std::vector<Rat> a = coordinate_set(lam, aff, eps);
    std::vector<Rat> b = coordinate_set(mu, aff, eps);
    std::vector<int> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] <= b[perm[i]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a.empty();
}

} // namespace klrw

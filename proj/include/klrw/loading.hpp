#pragma once

#include "klrw/partition.hpp"
#include "klrw/quiver.hpp"
#include "klrw/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrw {

enum class Kind { Solid, Ghost, Red };

struct Origin {
    enum Tag { FromNode, FromRed, Inserted } tag = FromNode;
    Node node;         // FromNode / Inserted(host node)
    int red_index = 0; // FromRed, 1-based
};

struct StringDesc {
    Kind kind = Kind::Solid;
    int residue = 0;
    Rat x;
    int group = -1; // solid and its ghosts share a group; reds use -1
    Origin origin;
};

// Strings at pairwise distinct x coordinates, kept sorted left to right.
struct Loading {
    int vertices = 0; // quiver size e'+... the modulus for residues
    std::vector<StringDesc> strings;

    void sort_by_x() {
        std::stable_sort(strings.begin(), strings.end(),
                         [](const StringDesc& a, const StringDesc& b) { return a.x < b.x; });
    }

    void validate_distinct() const {
        for (std::size_t i = 1; i < strings.size(); ++i)
            if (strings[i - 1].x == strings[i].x)
                throw std::invalid_argument("loading: coordinates collide at x=" + rat_str(strings[i].x));
    }

    int solid_count() const {
        int n = 0;
        for (const auto& s : strings) n += s.kind == Kind::Solid;
        return n;
    }

    std::vector<int> group_members(int g) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < strings.size(); ++i)
            if (strings[i].group == g) out.push_back(static_cast<int>(i));
        return out;
    }
};

// kappa_hat continues past the genuine components with 2n spacing; rho_hat
// cycles through the vertex set n entries at a time
struct AffineData {
    int ell = 1, n = 0, eprime = 2;
    long long ell_hat = 1;
    std::vector<long long> kappa_hat;
    std::vector<int> rho_hat;
};

inline AffineData affine_extend(const Charge& ch, int n, int eprime) {
    if (ch.levels() < 1) throw std::invalid_argument("affine_extend: need at least one component");
    AffineData a;
    a.ell = ch.levels();
    a.n = n;
    a.eprime = eprime;
    a.ell_hat = a.ell + static_cast<long long>(n) * eprime;
    a.kappa_hat.resize(a.ell_hat);
    a.rho_hat.resize(a.ell_hat);
    for (long long m = 1; m <= a.ell_hat; ++m) {
        if (m <= a.ell) {
            a.kappa_hat[m - 1] = ch.kappa[m - 1];
            a.rho_hat[m - 1] = mod_res(ch.rho[m - 1], eprime);
        } else {
            a.kappa_hat[m - 1] = ch.kappa[a.ell - 1] + 2LL * n * (m - a.ell);
            a.rho_hat[m - 1] = mod_res((m - a.ell - 1) / n, eprime);
        }
    }
    return a;
}

inline Rat default_eps(const AffineData& a) {
    if (a.n == 0) return Rat(1, 4);
    return Rat(1, 4LL * a.n * a.ell_hat);
}

inline Rat position(const Node& node, const AffineData& a, const Rat& eps) {
    if (a.n > 0 && !(eps > 0 && eps * 2 * a.n * a.ell_hat < 1))
        throw std::invalid_argument("position: eps outside (0, 1/(2n*l_hat))");
    if (node.m < 1 || node.m > a.ell_hat) throw std::invalid_argument("position: component out of range");
    Rat x = a.kappa_hat[node.m - 1];
    x += node.c - node.r;
    x -= Rat(node.m, a.ell_hat);
    x -= Rat(node.c + node.r) * eps;
    return x;
}

// per-solid ghost shift keyed by the solid's residue; one residue may carry
// the small exceptional shift of a subdivided algebra
struct GhostShifts {
    Rat unit = 1;
    int exceptional_residue = -1;
    Rat exceptional = 0;

    Rat shift(int residue) const { return residue == exceptional_residue ? exceptional : unit; }
};

inline Loading idempotent_loading(const Multipartition& mp, const Charge& ch, const Quiver& q,
                                  const GhostShifts& shifts = {}, std::optional<Rat> eps_opt = std::nullopt) {
    if (q.e < 2) throw std::invalid_argument("idempotent_loading: e >= 2 required (e = 1 carries two ghosts per solid)");
    if (ch.levels() != mp.levels()) throw std::invalid_argument("idempotent_loading: charge level mismatch");
    const int eprime = q.vertices();
    AffineData aff = affine_extend(ch, mp.size(), eprime);
    Rat eps = eps_opt.value_or(default_eps(aff));

    Loading load;
    load.vertices = eprime;
    int group = 0;
    for (const Node& n : nodes_of(mp)) {
        Rat x = position(n, aff, eps);
        int res = residue(n, ch.rho[n.m - 1], eprime);
        load.strings.push_back({Kind::Solid, res, x, group, {Origin::FromNode, n, 0}});
        load.strings.push_back({Kind::Ghost, res, x + shifts.shift(res), group, {Origin::FromNode, n, 0}});
        ++group;
    }
    for (int m = 1; m <= ch.levels(); ++m)
        load.strings.push_back(
            {Kind::Red, mod_res(ch.rho[m - 1], eprime), Rat(ch.kappa[m - 1]), -1, {Origin::FromRed, Node{}, m}});
    load.sort_by_x();
    load.validate_distinct();
    return load;
}

inline std::string signature(const Loading& load) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : load.strings) {
        if (!first) os << ' ';
        first = false;
        switch (s.kind) {
            case Kind::Solid: os << 's' << s.residue; break;
            case Kind::Ghost: os << 'g' << s.residue; break;
            case Kind::Red: os << "| r" << s.residue << " |"; break;
        }
    }
    return os.str();
}

inline Rat min_gap(const Loading& load) {
    Rat best = 1;
    bool have = false;
    for (std::size_t i = 1; i < load.strings.size(); ++i) {
        Rat g = load.strings[i].x - load.strings[i - 1].x;
        if (!have || g < best) {
            best = g;
            have = true;
        }
    }
    return have ? best : Rat(1);
}

// ---- rightward normalization --------------------------------------------

// Crossing these pairs changes the diagram, so they bound rightward pulls:
// solid i with solid i, solid i with red i, ghost i with solid i+1.
inline bool blocks(const StringDesc& a, const StringDesc& b, int vertices) {
    auto pair_blocks = [&](const StringDesc& u, const StringDesc& v) {
        if (u.kind == Kind::Solid && v.kind == Kind::Solid) return u.residue == v.residue;
        if (u.kind == Kind::Solid && v.kind == Kind::Red) return u.residue == v.residue;
        if (u.kind == Kind::Ghost && v.kind == Kind::Solid)
            return mod_res(u.residue + 1, vertices) == v.residue;
        return false;
    };
    return pair_blocks(a, b) || pair_blocks(b, a);
}

// Two loadings carry the same idempotent when some straight-line diagram
// between them is invertible, i.e. crosses no blocked pair. Solids of equal
// residue cannot cross, so the matching is forced: k-th solid of each
// residue to k-th solid, ghosts riding along, reds by index.
struct LoadingEquivalence {
    bool equal = true;
    std::string detail;
};

inline LoadingEquivalence loading_equivalent(const Loading& a, const Loading& b) {
    if (a.vertices != b.vertices) return {false, "different quivers"};
    auto classify = [](const Loading& l) {
        std::map<std::pair<int, int>, std::vector<int>> cls; // (kind,res) -> string indices by x
        for (std::size_t i = 0; i < l.strings.size(); ++i)
            cls[{static_cast<int>(l.strings[i].kind), l.strings[i].residue}].push_back(static_cast<int>(i));
        return cls;
    };
    auto ca = classify(a), cb = classify(b);
    if (ca.size() != cb.size()) return {false, "string class mismatch"};
    std::vector<int> image(a.strings.size(), -1); // index in a -> index in b
    for (const auto& [key, ia] : ca) {
        auto it = cb.find(key);
        if (it == cb.end() || it->second.size() != ia.size()) return {false, "string class mismatch"};
        if (key.first == static_cast<int>(Kind::Solid) || key.first == static_cast<int>(Kind::Red))
            for (std::size_t k = 0; k < ia.size(); ++k) image[ia[k]] = it->second[k];
    }
    // ghosts follow their solid: pair ghosts through the solid groups
    std::map<int, int> group_image; // group in a -> group in b
    for (std::size_t i = 0; i < a.strings.size(); ++i)
        if (a.strings[i].kind == Kind::Solid) group_image[a.strings[i].group] = b.strings[image[i]].group;
    for (std::size_t i = 0; i < a.strings.size(); ++i) {
        if (a.strings[i].kind != Kind::Ghost) continue;
        auto gi = group_image.find(a.strings[i].group);
        if (gi == group_image.end()) return {false, "ghost without a solid"};
        int found = -1;
        for (std::size_t j = 0; j < b.strings.size(); ++j)
            if (b.strings[j].kind == Kind::Ghost && b.strings[j].group == gi->second &&
                b.strings[j].residue == a.strings[i].residue)
                found = static_cast<int>(j);
        if (found < 0) return {false, "ghost without an image"};
        image[i] = found;
    }
    for (std::size_t i = 0; i < a.strings.size(); ++i)
        for (std::size_t j = i + 1; j < a.strings.size(); ++j) {
            // a is sorted, so the pair crosses iff the images sit swapped
            if (!(b.strings[image[i]].x > b.strings[image[j]].x)) continue;
            if (blocks(a.strings[i], a.strings[j], a.vertices)) {
                std::ostringstream os;
                os << "blocked pair crosses: position " << i << " and " << j;
                return {false, os.str()};
            }
        }
    return {true, {}};
}

struct NormalizeResult {
    Loading loading;
    bool steady = true;
    std::string detail;
};

// Pull each rigid solid+ghost group as far right as the blocking relation
// allows; a group with no blocker to the right of any member escapes to
// infinity and the diagram is unsteady.
inline NormalizeResult normalize_right(const Loading& input) {
    NormalizeResult out{input, true, {}};
    Loading& load = out.loading;
    load.sort_by_x();

    std::vector<int> groups;
    for (const auto& s : load.strings)
        if (s.kind == Kind::Solid) groups.push_back(s.group);
    const std::size_t guard = groups.size() * groups.size() + 2;

    for (std::size_t pass = 0;; ++pass) {
        if (pass > guard) throw std::logic_error("normalize_right: pass guard exceeded");
        // rightmost group first, by current solid position
        std::sort(groups.begin(), groups.end(), [&](int a, int b) {
            Rat xa, xb;
            for (const auto& s : load.strings) {
                if (s.group == a && s.kind == Kind::Solid) xa = s.x;
                if (s.group == b && s.kind == Kind::Solid) xb = s.x;
            }
            return xa > xb;
        });
        bool moved = false;
        for (int g : groups) {
            auto members = load.group_members(g);
            // nearest right blocker over all members
            bool have_delta = false;
            Rat delta;
            for (int mi : members) {
                const StringDesc& m = load.strings[mi];
                for (const auto& other : load.strings) {
                    if (other.group == g) continue;
                    if (other.x <= m.x) continue;
                    if (!blocks(m, other, load.vertices)) continue;
                    Rat d = other.x - m.x;
                    if (!have_delta || d < delta) {
                        delta = d;
                        have_delta = true;
                    }
                }
            }
            if (!have_delta) {
                out.steady = false;
                std::ostringstream os;
                os << "group of solid " << load.strings[members.front()].residue
                   << " has no blocking string to its right";
                out.detail = os.str();
                return out;
            }
            // skip when the translation would not change the order
            bool order_changes = false;
            for (int mi : members) {
                const Rat from = load.strings[mi].x;
                const Rat to = from + delta; // upper bound of the move
                for (const auto& other : load.strings) {
                    if (other.group == g) continue;
                    if (other.x > from && other.x < to) {
                        order_changes = true;
                        break;
                    }
                }
                if (order_changes) break;
            }
            if (!order_changes) continue;

            Rat gamma = min_gap(load) / 4;
            while (true) {
                bool collision = false;
                for (int mi : members) {
                    Rat to = load.strings[mi].x + delta - gamma;
                    for (const auto& other : load.strings)
                        if (other.group != g && other.x == to) collision = true;
                }
                if (!collision) break;
                gamma /= 2;
            }
            for (int mi : members) load.strings[mi].x += delta - gamma;
            load.sort_by_x();
            load.validate_distinct();
            moved = true;
        }
        if (!moved) break;
    }
    return out;
}

} // namespace klrw

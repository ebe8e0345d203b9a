#pragma once

#include "klrw/loading.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace klrw {

// Strings drawn as straight segments between two loadings. Solids are
// matched by group id, ghosts ride with their solid, reds pair up by index.
struct StraightDiagram {
    Loading bottom;
    Loading top;
    std::map<int, int> solid_match; // bottom group -> top group
};

inline StraightDiagram straight_diagram(Loading bottom, Loading top, std::map<int, int> match) {
    if (bottom.vertices != top.vertices) throw std::invalid_argument("straight_diagram: quiver size mismatch");
    int reds_b = 0, reds_t = 0;
    for (const auto& s : bottom.strings) reds_b += s.kind == Kind::Red;
    for (const auto& s : top.strings) reds_t += s.kind == Kind::Red;
    if (reds_b != reds_t) throw std::invalid_argument("straight_diagram: red string count mismatch");
    if (bottom.solid_count() != top.solid_count())
        throw std::invalid_argument("straight_diagram: solid string count mismatch");

    auto solid_residue = [](const Loading& l, int group) {
        for (const auto& s : l.strings)
            if (s.group == group && s.kind == Kind::Solid) return s.residue;
        throw std::invalid_argument("straight_diagram: unknown solid group");
    };
    std::map<int, int> seen;
    for (const auto& [gb, gt] : match) {
        if (solid_residue(bottom, gb) != solid_residue(top, gt))
            throw std::invalid_argument("straight_diagram: match does not preserve residues");
        if (++seen[gt] > 1) throw std::invalid_argument("straight_diagram: match is not a bijection");
    }
    if (static_cast<int>(match.size()) != bottom.solid_count())
        throw std::invalid_argument("straight_diagram: match size mismatch");
    return {std::move(bottom), std::move(top), std::move(match)};
}

namespace detail {

struct Segment {
    Kind kind;
    int residue;
    Rat xb, xt;
};

inline std::vector<Segment> segments(const StraightDiagram& d) {
    std::vector<Segment> out;
    // ghosts of a solid pair up by identical shift rank; with one ghost per
    // solid this is just the solid's companion
    std::vector<const StringDesc*> red_b, red_t;
    for (const auto& s : d.bottom.strings)
        if (s.kind == Kind::Red) red_b.push_back(&s);
    for (const auto& s : d.top.strings)
        if (s.kind == Kind::Red) red_t.push_back(&s);
    for (std::size_t i = 0; i < red_b.size(); ++i) {
        if (red_b[i]->residue != red_t[i]->residue)
            throw std::invalid_argument("diagram: red residues differ between boundaries");
        out.push_back({Kind::Red, red_b[i]->residue, red_b[i]->x, red_t[i]->x});
    }
    for (const auto& [gb, gt] : d.solid_match) {
        const StringDesc *sb = nullptr, *gb_ghost = nullptr, *st = nullptr, *gt_ghost = nullptr;
        for (const auto& s : d.bottom.strings)
            if (s.group == gb) (s.kind == Kind::Solid ? sb : gb_ghost) = &s;
        for (const auto& s : d.top.strings)
            if (s.group == gt) (s.kind == Kind::Solid ? st : gt_ghost) = &s;
        if (!sb || !st) throw std::invalid_argument("diagram: dangling solid group");
        out.push_back({Kind::Solid, sb->residue, sb->x, st->x});
        if ((gb_ghost == nullptr) != (gt_ghost == nullptr))
            throw std::invalid_argument("diagram: ghost present on one boundary only");
        if (gb_ghost) out.push_back({Kind::Ghost, gb_ghost->residue, gb_ghost->x, gt_ghost->x});
    }
    return out;
}

} // namespace detail

// Crossing degrees: solid/solid same residue -2d, ghost i over solid j with
// an arrow i -> j the positive pairing -<a_i,a_j> (the sign the double
// crossing relation forces: crossing twice equals degree-2 dot terms), and
// solid over same-residue red +1. Everything else crosses for free.
inline long long degree(const StraightDiagram& d, const Quiver& q) {
    if (q.vertices() != d.bottom.vertices) throw std::invalid_argument("degree: quiver size mismatch");
    auto segs = detail::segments(d);
    long long deg = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& a = segs[i];
            const auto& b = segs[j];
            bool crosses = (a.xb < b.xb && a.xt > b.xt) || (b.xb < a.xb && b.xt > a.xt);
            if (!crosses) continue;
            auto rule = [&](const detail::Segment& u, const detail::Segment& v) -> long long {
                if (u.kind == Kind::Solid && v.kind == Kind::Solid)
                    return u.residue == v.residue ? -2 : 0;
                if (u.kind == Kind::Ghost && v.kind == Kind::Solid)
                    return q.has_arrow(u.residue, v.residue) ? -cartan_pairing(q, u.residue, v.residue) : 0;
                if (u.kind == Kind::Solid && v.kind == Kind::Red) return u.residue == v.residue ? 1 : 0;
                return 0;
            };
            if (a.kind == Kind::Red && b.kind == Kind::Red)
                throw std::invalid_argument("degree: red strings may not cross");
            deg += a.kind == Kind::Solid && b.kind == Kind::Solid ? rule(a, b)
                                                                  : rule(a, b) + rule(b, a);
        }
    return deg;
}

inline StraightDiagram reversed(const StraightDiagram& d) {
    StraightDiagram out;
    out.bottom = d.top;
    out.top = d.bottom;
    for (const auto& [gb, gt] : d.solid_match) out.solid_match[gt] = gb;
    return out;
}

inline long long solid_crossing_count(const StraightDiagram& d) {
    auto segs = detail::segments(d);
    long long count = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].kind != Kind::Solid || segs[j].kind != Kind::Solid) continue;
            const auto& a = segs[i];
            const auto& b = segs[j];
            if ((a.xb < b.xb && a.xt > b.xt) || (b.xb < a.xb && b.xt > a.xt)) ++count;
        }
    return count;
}

inline StraightDiagram identity_diagram(const Loading& load) {
    StraightDiagram d;
    d.bottom = load;
    d.top = load;
    for (const auto& s : load.strings)
        if (s.kind == Kind::Solid) d.solid_match[s.group] = s.group;
    return d;
}

} // namespace klrw

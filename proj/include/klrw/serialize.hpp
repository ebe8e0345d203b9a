#pragma once

#include "klrw/abacus.hpp"
#include "klrw/diagram.hpp"
#include "klrw/loading.hpp"
#include "klrw/strips.hpp"
#include "klrw/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace klrw {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json{{"parts", p.parts}}; }

inline json to_json(const Multipartition& mp) {
    json comps = json::array();
    for (const auto& c : mp.comps) comps.push_back(c.parts);
    return json{{"components", comps}};
}

inline Multipartition multipartition_from_json(const json& j) {
    std::vector<Partition> comps;
    for (const auto& c : j.at("components")) comps.push_back(Partition(c.get<std::vector<int>>()));
    return Multipartition(std::move(comps));
}

inline json to_json(const AbacusConfig& a) {
    return json{{"eprime", a.eprime}, {"N", a.level_min}, {"beads", a.beads}};
}

inline AbacusConfig abacus_from_json(const json& j) {
    AbacusConfig a;
    a.eprime = j.at("eprime").get<int>();
    a.level_min = j.at("N").get<long long>();
    a.beads = j.at("beads").get<std::vector<long long>>();
    std::sort(a.beads.begin(), a.beads.end());
    validate(a);
    return a;
}

inline json to_json(const Rat& x) {
    return json{{"num", rat_num(x).str()}, {"den", rat_den(x).str()}};
}

inline json to_json(const Strip& s) {
    json nodes = json::array();
    for (const Node& n : s.nodes) nodes.push_back({{"m", n.m}, {"r", n.r}, {"c", n.c}});
    return json{{"nodes", nodes},
                {"type", std::string(1, s.type)},
                {"trivial", s.trivial},
                {"start_res", s.start_res},
                {"end_res", s.end_res}};
}

inline json to_json(const StringDesc& s) {
    json j{{"residue", s.residue}, {"x", to_json(s.x)}, {"group", s.group}};
    switch (s.kind) {
        case Kind::Solid: j["kind"] = "solid"; break;
        case Kind::Ghost: j["kind"] = "ghost"; break;
        case Kind::Red: j["kind"] = "red"; break;
    }
    switch (s.origin.tag) {
        case Origin::FromNode:
            j["origin"] = {{"node", {{"m", s.origin.node.m}, {"r", s.origin.node.r}, {"c", s.origin.node.c}}}};
            break;
        case Origin::FromRed: j["origin"] = {{"red_index", s.origin.red_index}}; break;
        case Origin::Inserted:
            j["origin"] = {{"inserted_for",
                            {{"m", s.origin.node.m}, {"r", s.origin.node.r}, {"c", s.origin.node.c}}}};
            break;
    }
    return j;
}

inline json to_json(const Loading& l) {
    json strings = json::array();
    for (const auto& s : l.strings) strings.push_back(to_json(s));
    return json{{"vertices", l.vertices}, {"strings", strings}, {"signature", signature(l)}};
}

inline json to_json(const VerificationCase& c) {
    return json{{"case", c.descriptor}, {"pass", c.pass}, {"detail", c.detail}};
}

inline json to_json(const VerificationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(to_json(f));
    return json{{"suite", r.suite}, {"grid", r.grid}, {"cases", r.total}, {"pass", r.pass()}, {"failures", fails}};
}

// ---- TikZ -----------------------------------------------------------------

inline std::string tikz_style(Kind k) {
    switch (k) {
        case Kind::Solid: return "thick";
        case Kind::Ghost: return "densely dashed,gray";
        case Kind::Red: return "ultra thick,red";
    }
    return "thick";
}

inline std::string tikz(const Loading& l) {
    std::ostringstream os;
    os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[xscale=1.6]\n";
    for (const auto& s : l.strings) {
        double x = rat_approx(s.x);
        os << "  \\draw[" << tikz_style(s.kind) << "] (" << x << ",0) -- (" << x << ",1) node[above] {$"
           << s.residue << "$};\n";
    }
    os << "\\end{tikzpicture}\n\\end{document}\n";
    return os.str();
}

inline std::string tikz(const StraightDiagram& d) {
    std::ostringstream os;
    os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[xscale=1.6,yscale=2]\n";
    for (const auto& seg : detail::segments(d)) {
        os << "  \\draw[" << tikz_style(seg.kind) << "] (" << rat_approx(seg.xb) << ",0) -- ("
           << rat_approx(seg.xt) << ",1) node[above] {$" << seg.residue << "$};\n";
    }
    os << "\\end{tikzpicture}\n\\end{document}\n";
    return os.str();
}

} // namespace klrw

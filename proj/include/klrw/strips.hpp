#pragma once

#include "klrw/abacus.hpp"
#include "klrw/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrw {

// Maximal alternating staircase of residue-i and residue-(i+1) nodes: a
// right step raises the residue, a down step lowers it. Nodes run from the
// northwest end (whose residue is the strip's starting residue) to the
// southeast end.
struct Strip {
    std::vector<Node> nodes;
    std::vector<char> steps; // 'r' or 'd', one per consecutive pair
    int start_res = 0;
    int end_res = 0;
    char type = 'a'; // (start,end) relative to edge i: (i,i)->a (i,i+1)->b (i+1,i+1)->c (i+1,i)->d
    bool trivial = false;
};

inline char strip_type(int start_is_high, int end_is_high) {
    if (!start_is_high && !end_is_high) return 'a';
    if (!start_is_high && end_is_high) return 'b';
    if (start_is_high && end_is_high) return 'c';
    return 'd';
}

inline std::vector<Strip> maximal_strips(const Multipartition& mp, const Charge& ch, int eprime, int edge) {
    if (ch.levels() != mp.levels()) throw std::invalid_argument("maximal_strips: charge level mismatch");
    const int lo = mod_res(edge, eprime), hi = mod_res(edge + 1, eprime);
    std::vector<Strip> out;
    for (int m = 1; m <= mp.levels(); ++m) {
        const long long rho = ch.rho[m - 1];
        auto res = [&](int r, int c) { return residue({m, r, c}, rho, eprime); };
        auto inside = [&](int r, int c) { return contains(mp, {m, r, c}); };
        for (const Node& n : nodes_of(Multipartition{std::vector<Partition>{mp.comps[m - 1]}})) {
            int rr = res(n.r, n.c);
            if (rr != lo && rr != hi) continue;
            // heads only: a lo-node is entered from above by a hi-node, a
            // hi-node from the left by a lo-node
            if (rr == lo && inside(n.r - 1, n.c)) continue;
            if (rr == hi && inside(n.r, n.c - 1)) continue;
            Strip s;
            s.start_res = rr;
            int r = n.r, c = n.c, cur = rr;
            while (true) {
                s.nodes.push_back({m, r, c});
                if (cur == lo && inside(r, c + 1)) {
                    s.steps.push_back('r');
                    ++c;
                    cur = hi;
                } else if (cur == hi && inside(r + 1, c)) {
                    s.steps.push_back('d');
                    ++r;
                    cur = lo;
                } else {
                    break;
                }
            }
            s.end_res = cur;
            s.trivial = s.nodes.size() == 1;
            s.type = strip_type(s.start_res == hi, s.end_res == hi);
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const Strip& a, const Strip& b) { return a.nodes.front() < b.nodes.front(); });
    return out;
}

struct BoxPlus {
    Multipartition plus;
    std::vector<int> fill_rho; // canonical residue-fill charge per component, in Z/(e'+1)
};

namespace detail {

// residue-fill charge after subdividing edge 0: 0 stays 0, anything else
// moves up by one; conjugation adds the edge back in the larger quiver
inline int fill_charge(long long rho, int eprime, int edge) {
    int rp = static_cast<int>(relabeled_rho(rho, eprime, edge));
    int fill0 = rp == 0 ? 0 : rp + 1;
    return mod_res(fill0 + edge, eprime + 1);
}

inline Partition box_plus_component(const Partition& p, long long rho, int eprime, int edge) {
    Charge ch({rho}, {0});
    Multipartition mp{p};
    const int lo = mod_res(edge, eprime);
    auto strips = maximal_strips(mp, ch, eprime, edge);

    std::vector<int> grow(p.length() + 1, 0);
    // new rows keyed by the row they come after; strips arrive NW-first so
    // ties stay weakly decreasing
    std::map<int, std::vector<int>> inserted;
    for (const Strip& s : strips) {
        if (s.type == 'a' || s.type == 'b') {
            for (const Node& n : s.nodes)
                if (residue(n, rho, eprime) == lo) ++grow[n.r];
        } else if (!s.trivial) {
            const Node* last_lo = nullptr;
            for (const Node& n : s.nodes)
                if (residue(n, rho, eprime) == lo) last_lo = &n;
            if (last_lo == nullptr) throw std::logic_error("nontrivial high strip without a low node");
            inserted[s.nodes.back().r].push_back(last_lo->c);
        }
    }

    std::vector<int> rows;
    for (int r = 1; r <= p.length(); ++r) {
        rows.push_back(p.part(r) + grow[r]);
        auto it = inserted.find(r);
        if (it != inserted.end())
            for (int len : it->second) rows.push_back(len);
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1]) throw std::logic_error("box construction produced a non-partition");
    return Partition(std::move(rows));
}

} // namespace detail

inline BoxPlus lambda_plus_box(const Multipartition& mp, const Charge& ch, int eprime, int edge) {
    edge = mod_res(edge, eprime);
    BoxPlus out;
    std::vector<Partition> comps;
    for (int m = 0; m < mp.levels(); ++m) {
        long long rp = detail::relabeled_rho(ch.rho[m], eprime, edge);
        comps.push_back(detail::box_plus_component(mp.comps[m], rp, eprime, 0));
        out.fill_rho.push_back(detail::fill_charge(ch.rho[m], eprime, edge));
    }
    out.plus = Multipartition(std::move(comps));
    return out;
}

// Both constructions, cross-checked. Disagreement signals a library bug and
// is reported, never swallowed.
struct LambdaPlusResult {
    Multipartition plus;
    std::vector<int> fill_rho;
    std::vector<long long> charge_right;
    std::vector<long long> charge_left;
    bool agree = true;
    std::string mismatch;
};

inline LambdaPlusResult lambda_plus(const Multipartition& mp, const Charge& ch, int eprime, int edge) {
    LambdaPlusResult out;
    BoxPlus box = lambda_plus_box(mp, ch, eprime, edge);
    RunnerInsertionMulti right = lambda_plus_abacus_multi(mp, ch, eprime, edge, Side::Right);
    RunnerInsertionMulti left = lambda_plus_abacus_multi(mp, ch, eprime, edge, Side::Left);
    out.plus = box.plus;
    out.fill_rho = box.fill_rho;
    out.charge_right = right.charges;
    out.charge_left = left.charges;
    if (box.plus != right.plus || box.plus != left.plus) {
        out.agree = false;
        std::ostringstream os;
        os << "lambda_plus mismatch for " << multipartition_str(mp) << " rho=";
        for (std::size_t i = 0; i < ch.rho.size(); ++i) os << (i ? "," : "") << ch.rho[i];
        os << " e'=" << eprime << " edge=" << edge << ": box=" << multipartition_str(box.plus)
           << " abacus_right=" << multipartition_str(right.plus) << " abacus_left=" << multipartition_str(left.plus);
        out.mismatch = os.str();
    }
    return out;
}

inline std::string strip_grid_str(const Multipartition& mp, const Charge& ch, int eprime, int edge) {
    auto strips = maximal_strips(mp, ch, eprime, edge);
    std::map<Node, char> label;
    char tag = 'A';
    for (const Strip& s : strips) {
        for (const Node& n : s.nodes) label[n] = tag;
        tag = tag == 'Z' ? 'a' : static_cast<char>(tag + 1);
    }
    std::ostringstream os;
    for (int m = 1; m <= mp.levels(); ++m) {
        if (mp.levels() > 1) os << "component " << m << ":\n";
        for (int r = 1; r <= mp.comps[m - 1].length(); ++r) {
            for (int c = 1; c <= mp.comps[m - 1].part(r); ++c) {
                auto it = label.find({m, r, c});
                os << residue({m, r, c}, ch.rho[m - 1], eprime) << (it == label.end() ? '.' : it->second) << ' ';
            }
            os << "\n";
        }
    }
    return os.str();
}

} // namespace klrw

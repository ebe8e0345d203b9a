#pragma once

#include "klrw/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrw {

struct Partition {
    std::vector<int> parts; // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    // 1-based, 0 past the end
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

struct Multipartition {
    std::vector<Partition> comps;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> c) : comps(std::move(c)) {
        if (comps.empty()) throw std::invalid_argument("multipartition needs at least one component");
    }
    explicit Multipartition(Partition p) : comps{std::move(p)} {}

    int levels() const { return static_cast<int>(comps.size()); }
    int size() const {
        int n = 0;
        for (const auto& c : comps) n += c.size();
        return n;
    }

    bool operator==(const Multipartition& o) const { return comps == o.comps; }
    bool operator!=(const Multipartition& o) const { return !(*this == o); }
    bool operator<(const Multipartition& o) const { return comps < o.comps; }
};

// rho entries are kept as plain integers and reduced modulo e' only where a
// residue is demanded; beta numbers use the integer value.
struct Charge {
    std::vector<long long> rho;
    std::vector<long long> kappa;

    Charge() = default;
    Charge(std::vector<long long> r, std::vector<long long> k) : rho(std::move(r)), kappa(std::move(k)) {
        if (rho.size() != kappa.size()) throw std::invalid_argument("charge: rho/kappa size mismatch");
        for (std::size_t i = 1; i < kappa.size(); ++i)
            if (kappa[i] <= kappa[i - 1]) throw std::invalid_argument("charge: kappa must be strictly increasing");
    }

    int levels() const { return static_cast<int>(rho.size()); }
};

// component / row / column, all 1-based
struct Node {
    int m = 1, r = 1, c = 1;

    bool operator==(const Node& o) const { return m == o.m && r == o.r && c == o.c; }
    bool operator<(const Node& o) const {
        if (m != o.m) return m < o.m;
        if (r != o.r) return r < o.r;
        return c < o.c;
    }
};

inline std::string node_str(const Node& n) {
    return "(" + std::to_string(n.m) + "," + std::to_string(n.r) + "," + std::to_string(n.c) + ")";
}

inline int residue(const Node& n, long long rho_m, int eprime) {
    return mod_res(n.c - n.r + rho_m, eprime);
}

inline bool contains(const Multipartition& mp, const Node& n) {
    if (n.m < 1 || n.m > mp.levels() || n.r < 1 || n.c < 1) return false;
    return mp.comps[n.m - 1].part(n.r) >= n.c;
}

inline std::vector<Node> nodes_of(const Multipartition& mp) {
    std::vector<Node> out;
    for (int m = 1; m <= mp.levels(); ++m)
        for (int r = 1; r <= mp.comps[m - 1].length(); ++r)
            for (int c = 1; c <= mp.comps[m - 1].part(r); ++c) out.push_back({m, r, c});
    return out;
}

// residues per component, row major
struct ResidueDiagram {
    std::vector<std::vector<std::vector<int>>> rows;
};

inline ResidueDiagram residue_diagram(const Multipartition& mp, const Charge& ch, int eprime) {
    if (ch.levels() != mp.levels()) throw std::invalid_argument("residue_diagram: charge level mismatch");
    ResidueDiagram d;
    d.rows.resize(mp.levels());
    for (int m = 1; m <= mp.levels(); ++m) {
        const Partition& p = mp.comps[m - 1];
        d.rows[m - 1].resize(p.length());
        for (int r = 1; r <= p.length(); ++r) {
            auto& row = d.rows[m - 1][r - 1];
            row.resize(p.part(r));
            for (int c = 1; c <= p.part(r); ++c) row[c - 1] = residue({m, r, c}, ch.rho[m - 1], eprime);
        }
    }
    return d;
}

inline std::vector<long long> beta_numbers(const Partition& p, long long rho, int count) {
    if (count < p.length()) throw std::invalid_argument("beta_numbers: count below partition length");
    std::vector<long long> beta(count);
    for (int i = 1; i <= count; ++i) beta[i - 1] = p.part(i) + rho - i;
    return beta;
}

inline long long count_residue_nodes(const Multipartition& mp, const Charge& ch, int eprime, int i) {
    i = mod_res(i, eprime);
    long long total = 0;
    for (const Node& n : nodes_of(mp))
        if (residue(n, ch.rho[n.m - 1], eprime) == i) ++total;
    return total;
}

// ---- text formats -------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string strip_ws(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace detail

// "4,3,2", exponent shorthand "1^9", "" for the empty partition
inline Partition parse_partition(const std::string& text) {
    std::string t = detail::strip_ws(text);
    if (t.empty()) return Partition{};
    std::vector<int> parts;
    for (const std::string& tokRaw : detail::split(t, ',')) {
        std::string tok = detail::strip_ws(tokRaw);
        if (tok.empty()) throw std::invalid_argument("empty token in partition '" + text + "'");
        std::size_t caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                parts.push_back(std::stoi(tok));
            } else {
                int base = std::stoi(tok.substr(0, caret));
                int rep = std::stoi(tok.substr(caret + 1));
                if (rep < 0) throw std::invalid_argument("negative exponent");
                parts.insert(parts.end(), rep, base);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad partition token '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

// components pipe-separated: "3,1,1|4"
inline Multipartition parse_multipartition(const std::string& text) {
    std::vector<Partition> comps;
    for (const std::string& comp : detail::split(text, '|')) comps.push_back(parse_partition(comp));
    return Multipartition(std::move(comps));
}

inline std::string partition_str(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out;
}

inline std::string multipartition_str(const Multipartition& mp) {
    std::string out;
    for (int m = 0; m < mp.levels(); ++m) {
        if (m) out += '|';
        out += partition_str(mp.comps[m]);
    }
    return out;
}

inline std::string residue_grid_str(const Multipartition& mp, const Charge& ch, int eprime) {
    ResidueDiagram d = residue_diagram(mp, ch, eprime);
    std::ostringstream os;
    for (int m = 0; m < mp.levels(); ++m) {
        if (mp.levels() > 1) os << "component " << (m + 1) << ":\n";
        if (d.rows[m].empty()) os << "(empty)\n";
        for (const auto& row : d.rows[m]) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
            os << "\n";
        }
    }
    return os.str();
}

// ---- desk-scale enumeration ---------------------------------------------

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

inline std::vector<Multipartition> multipartitions_of(int n, int ell) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int level, int rest) -> void {
        if (level == ell) {
            if (rest == 0) out.push_back(Multipartition(cur));
            return;
        }
        for (int k = (level == ell - 1 ? rest : 0); k <= rest; ++k)
            for (const Partition& p : partitions_of(k)) {
                cur.push_back(p);
                self(self, level + 1, rest - k);
                cur.pop_back();
            }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace klrw

#pragma once

#include <map>
#include <sstream>
#include <string>

namespace klrw {

// Laurent polynomial in q with integer coefficients
struct Laurent {
    std::map<int, long long> coef;

    void add_term(int exp, long long c) {
        if (c == 0) return;
        auto it = coef.find(exp);
        if (it == coef.end()) {
            coef[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coef.erase(it);
        }
    }

    long long eval_at_one() const {
        long long s = 0;
        for (const auto& [e, c] : coef) s += c;
        return s;
    }

    bool operator==(const Laurent& o) const { return coef == o.coef; }
};

inline std::string laurent_str(const Laurent& p) {
    if (p.coef.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.coef) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        long long a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace klrw

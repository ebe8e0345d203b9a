#pragma once

#include "klrw/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrw {

// Truncated beta-number display: a bead at position p sits on runner
// p mod e' at level floor(p / e'); levels below `level_min` are implicitly
// full and not stored.
struct AbacusConfig {
    int eprime = 2;
    long long level_min = 0; // N
    std::vector<long long> beads; // sorted ascending, distinct

    int runner(long long p) const { return mod_res(p, eprime); }
    long long level(long long p) const { return floor_div(p, eprime); }
    long long bead_count() const { return static_cast<long long>(beads.size()); }
};

inline void validate(const AbacusConfig& a) {
    if (a.eprime < 1) throw std::invalid_argument("abacus: e' must be positive");
    for (std::size_t i = 0; i < a.beads.size(); ++i) {
        if (i > 0 && a.beads[i] <= a.beads[i - 1]) throw std::invalid_argument("abacus: beads must be distinct");
        if (a.level(a.beads[i]) < a.level_min) throw std::invalid_argument("abacus: bead below truncation level");
    }
}

// maximal legal truncation level: decompose beta_{t+1} = a e' + b and take
// a+1 when b = e'-1, otherwise a
inline long long max_truncation_N0(const Partition& p, long long rho, int eprime) {
    long long beta_next = rho - p.length() - 1; // beta_{t+1}
    long long a = floor_div(beta_next, eprime);
    long long b = floor_mod(beta_next, eprime);
    return b == eprime - 1 ? a + 1 : a;
}

// #{ i >= 1 : i = rho (mod e'), lambda_{i+1} > 0 }
inline long long k_lambda(const Partition& p, long long rho, int eprime) {
    long long k = 0;
    for (int i = 1; i + 1 <= p.length(); ++i)
        if (mod_res(i, eprime) == mod_res(rho, eprime)) ++k;
    return k;
}

inline AbacusConfig to_abacus(const Partition& p, long long rho, int eprime, long long N) {
    if (N > max_truncation_N0(p, rho, eprime))
        throw std::invalid_argument("to_abacus: N exceeds N0, truncation would drop a nonzero part");
    AbacusConfig a;
    a.eprime = eprime;
    a.level_min = N;
    for (int i = 1;; ++i) {
        long long beta = p.part(i) + rho - i;
        if (a.level(beta) < N) break; // N <= N0 keeps every nonzero part above this line
        a.beads.push_back(beta);
    }
    std::sort(a.beads.begin(), a.beads.end());
    validate(a);
    return a;
}

// default margin leaves room for one bead shift in each direction
inline AbacusConfig to_abacus_default(const Partition& p, long long rho, int eprime) {
    return to_abacus(p, rho, eprime, max_truncation_N0(p, rho, eprime) - 2);
}

inline std::pair<Partition, long long> from_abacus(const AbacusConfig& a) {
    validate(a);
    long long charge = a.bead_count() + a.level_min * a.eprime;
    std::vector<long long> desc(a.beads.rbegin(), a.beads.rend());
    std::vector<int> parts;
    for (std::size_t j = 0; j < desc.size(); ++j) {
        long long part = desc[j] - charge + static_cast<long long>(j) + 1;
        if (part < 0) throw std::invalid_argument("from_abacus: bead set is not a beta sequence");
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return {Partition(std::move(parts)), charge};
}

// decoded-content equality; truncation depth and charge lifts don't matter
inline bool equivalent(const AbacusConfig& a, const AbacusConfig& b) {
    if (a.eprime != b.eprime) return false;
    auto [pa, ca] = from_abacus(a);
    auto [pb, cb] = from_abacus(b);
    return pa == pb && mod_res(ca, a.eprime) == mod_res(cb, b.eprime);
}

// Move every bead one step left or right. A left move needs the top-left
// position occupied (the moved bead merges into the implicit full region);
// a right move adds the freed top-left position as a new bead.
inline AbacusConfig shift_beads(const AbacusConfig& a, int delta) {
    if (delta != 1 && delta != -1) throw std::invalid_argument("shift_beads: delta must be +-1");
    validate(a);
    const long long corner = a.level_min * a.eprime;
    AbacusConfig out;
    out.eprime = a.eprime;
    out.level_min = a.level_min;
    if (delta == 1) {
        out.beads.push_back(corner);
        for (long long p : a.beads) out.beads.push_back(p + 1);
    } else {
        if (a.beads.empty() || a.beads.front() != corner)
            throw std::invalid_argument(
                "shift_beads: leftward move would open a hole below the truncation; rebuild with smaller N");
        for (std::size_t i = 1; i < a.beads.size(); ++i) out.beads.push_back(a.beads[i] - 1);
    }
    std::sort(out.beads.begin(), out.beads.end());
    validate(out);
    return out;
}

enum class Side { Left, Right };

struct RunnerInsertion {
    Partition plus;
    long long charge = 0;   // decoded charge of the new abacus
    AbacusConfig config;    // the e'+1 runner configuration
};

namespace detail {

// edge-0 insertion on Ab(lambda, rho): right inserts k+N0-N beads on a new
// rightmost runner, left inserts k+N0-N+1 on a new leftmost runner
inline RunnerInsertion insert_runner_edge0(const Partition& p, long long rho, int eprime, Side side) {
    const long long N0 = max_truncation_N0(p, rho, eprime);
    const long long k = k_lambda(p, rho, eprime);
    const long long N = N0 - 2;
    AbacusConfig base = to_abacus(p, rho, eprime, N);

    AbacusConfig out;
    out.eprime = eprime + 1;
    out.level_min = N;
    for (long long pos : base.beads) {
        long long a = floor_div(pos, eprime), b = floor_mod(pos, eprime);
        out.beads.push_back(a * (eprime + 1) + b + (side == Side::Left ? 1 : 0));
    }
    const long long top = side == Side::Right ? N0 + k - 1 : N0 + k;
    for (long long a = N; a <= top; ++a)
        out.beads.push_back(a * (eprime + 1) + (side == Side::Right ? eprime : 0));
    std::sort(out.beads.begin(), out.beads.end());
    validate(out);

    auto [plus, charge] = from_abacus(out);
    const long long expected = rho + N0 + k + (side == Side::Left ? 1 : 0);
    if (charge != expected) throw std::logic_error("insert_runner_edge0: charge bookkeeping failed");
    return {std::move(plus), charge, std::move(out)};
}

inline long long relabeled_rho(long long rho, int eprime, int edge) {
    long long r = mod_res(rho, eprime);
    return r >= edge ? r - edge : r + eprime - edge;
}

} // namespace detail

// General edge by conjugation: relabel the quiver so the subdivided edge is
// 0 -> 1, run the edge-0 insertion, and decode in that frame.
inline RunnerInsertion lambda_plus_abacus(const Partition& p, long long rho, int eprime, int edge, Side side) {
    edge = mod_res(edge, eprime);
    if (edge == 0) return detail::insert_runner_edge0(p, rho, eprime, side);
    return detail::insert_runner_edge0(p, detail::relabeled_rho(rho, eprime, edge), eprime, side);
}

// Direct form of the general-edge insertion: a new runner goes between
// runners edge-1 and edge of Ab(lambda, rho) and is filled from the top
// down to level 0 when rho > edge, level -1 otherwise.
inline RunnerInsertion lambda_plus_abacus_direct(const Partition& p, long long rho, int eprime, int edge) {
    edge = mod_res(edge, eprime);
    rho = mod_res(rho, eprime);
    if (p.empty()) {
        RunnerInsertion r;
        r.charge = lambda_plus_abacus(p, rho, eprime, edge, Side::Left).charge;
        r.config.eprime = eprime + 1;
        return r;
    }
    const long long N = std::min<long long>(max_truncation_N0(p, rho, eprime) - 2, -2);
    AbacusConfig base = to_abacus(p, rho, eprime, N);

    AbacusConfig out;
    out.eprime = eprime + 1;
    out.level_min = N;
    for (long long pos : base.beads) {
        long long a = floor_div(pos, eprime), b = floor_mod(pos, eprime);
        out.beads.push_back(a * (eprime + 1) + b + (b >= edge ? 1 : 0));
    }
    const long long top = rho > edge ? 0 : -1;
    for (long long a = N; a <= top; ++a) out.beads.push_back(a * (eprime + 1) + edge);
    std::sort(out.beads.begin(), out.beads.end());
    validate(out);

    auto [plus, charge] = from_abacus(out);
    return {std::move(plus), charge, std::move(out)};
}

struct RunnerInsertionMulti {
    Multipartition plus;
    std::vector<long long> charges;
};

inline RunnerInsertionMulti lambda_plus_abacus_multi(const Multipartition& mp, const Charge& ch, int eprime,
                                                     int edge, Side side) {
    std::vector<Partition> comps;
    std::vector<long long> charges;
    for (int m = 0; m < mp.levels(); ++m) {
        RunnerInsertion r = lambda_plus_abacus(mp.comps[m], ch.rho[m], eprime, edge, side);
        comps.push_back(std::move(r.plus));
        charges.push_back(r.charge);
    }
    return {Multipartition(std::move(comps)), std::move(charges)};
}

inline std::string ascii(const AbacusConfig& a) {
    std::ostringstream os;
    for (int r = 0; r < a.eprime; ++r) os << (r ? " " : "") << r % 10;
    os << "\n";
    long long top = a.level_min;
    for (long long p : a.beads) top = std::max(top, a.level(p));
    std::set<long long> beadset(a.beads.begin(), a.beads.end());
    for (long long lvl = a.level_min; lvl <= top; ++lvl) {
        for (int r = 0; r < a.eprime; ++r) os << (r ? " " : "") << (beadset.count(lvl * a.eprime + r) ? 'b' : '.');
        os << "\n";
    }
    return os.str();
}

} // namespace klrw

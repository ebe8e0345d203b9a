#pragma once

#include "klrw/abacus.hpp"
#include "klrw/strips.hpp"
#include "klrw/subdivision.hpp"
#include "klrw/tableau.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace klrw {

struct VerificationReport {
    std::string suite;
    std::string grid;
    long long total = 0;
    std::vector<VerificationCase> failures;
    bool pass() const { return failures.empty(); }
};

inline int worker_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("KLRW_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Fan a vector of independent checks over a bounded pool; results land in
// input order so reports never depend on scheduling.
inline std::vector<VerificationCase> run_parallel(const std::vector<std::function<VerificationCase()>>& tasks,
                                                  int workers) {
    std::vector<VerificationCase> results(tasks.size());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    results[i] = tasks[i]();
                } catch (const std::exception& ex) {
                    results[i] = {"task " + std::to_string(i), false, std::string("exception: ") + ex.what()};
                }
            }
        });
    for (auto& t : pool) t.join();
    return results;
}

inline VerificationReport collect(std::string suite, std::string grid,
                                  const std::vector<std::function<VerificationCase()>>& tasks, int workers) {
    VerificationReport rep;
    rep.suite = std::move(suite);
    rep.grid = std::move(grid);
    rep.total = static_cast<long long>(tasks.size());
    for (auto& r : run_parallel(tasks, workers))
        if (!r.pass) rep.failures.push_back(r);
    return rep;
}

namespace detail {

inline std::string case_name(const Multipartition& mp, const std::vector<long long>& rho, int eprime, int edge) {
    std::ostringstream os;
    os << multipartition_str(mp) << " rho=";
    for (std::size_t i = 0; i < rho.size(); ++i) os << (i ? "," : "") << rho[i];
    os << " e'=" << eprime << " edge=" << edge;
    return os.str();
}

inline std::vector<std::vector<long long>> charge_tuples(int ell, int eprime) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(ell, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == ell) {
            out.push_back(cur);
            return;
        }
        for (long long r = 0; r < eprime; ++r) {
            cur[i] = r;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// component spacing wide enough that both lambda and lambda+ stay separated
inline Charge spread_charge(const std::vector<long long>& rho, int n) {
    std::vector<long long> kappa;
    for (std::size_t m = 0; m < rho.size(); ++m) kappa.push_back(static_cast<long long>(m) * (4 * n + 8));
    return Charge(rho, kappa);
}

} // namespace detail

// box and abacus constructions agree on the whole grid
inline VerificationReport verify_equivalence_batch(int n_max, const std::vector<int>& e_set, int ell,
                                                   const std::vector<int>& edges, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Multipartition& mp : multipartitions_of(n, ell))
                for (const auto& rho : detail::charge_tuples(ell, eprime))
                    for (int edge : edges)
                        tasks.push_back([=]() {
                            VerificationCase vc{detail::case_name(mp, rho, eprime, edge), true, {}};
                            LambdaPlusResult r = lambda_plus(mp, detail::spread_charge(rho, n), eprime, edge);
                            if (!r.agree) {
                                vc.pass = false;
                                vc.detail = r.mismatch;
                            }
                            return vc;
                        });
    }
    std::ostringstream grid;
    grid << "n<=" << n_max << " l=" << ell << " e in {";
    for (std::size_t i = 0; i < e_set.size(); ++i) grid << (i ? "," : "") << e_set[i];
    grid << "} all charges, edges in {";
    for (std::size_t i = 0; i < edges.size(); ++i) grid << (i ? "," : "") << edges[i];
    grid << "}";
    return collect("equivalence", grid.str(), tasks, worker_count(workers));
}

// general-edge conjugation equals direct runner insertion
inline VerificationReport verify_general_edge(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    for (int edge = 0; edge <= e; ++edge)
                        tasks.push_back([=]() {
                            Multipartition mp{p};
                            VerificationCase vc{detail::case_name(mp, {rho}, eprime, edge), true, {}};
                            RunnerInsertion conj = lambda_plus_abacus(p, rho, eprime, edge, Side::Left);
                            RunnerInsertion direct = lambda_plus_abacus_direct(p, rho, eprime, edge);
                            Partition box = lambda_plus_box(mp, Charge({rho}, {0}), eprime, edge).plus.comps[0];
                            if (conj.plus != direct.plus || conj.plus != box) {
                                vc.pass = false;
                                vc.detail = "conjugated=" + partition_str(conj.plus) +
                                            " direct=" + partition_str(direct.plus) + " box=" + partition_str(box);
                            }
                            return vc;
                        });
    }
    return collect("general-edge", "n<=" + std::to_string(n_max) + " all rho, all edges", tasks,
                   worker_count(workers));
}

// N0 = -k-1 (rho = 0) / -k (otherwise), bead count rho - N e', decode o
// encode identity, and bead-shift partition invariance
inline VerificationReport verify_abacus_invariants(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    tasks.push_back([=]() {
                        VerificationCase vc{detail::case_name(Multipartition{p}, {rho}, eprime, 0), true, {}};
                        auto fail = [&](const std::string& why) {
                            vc.pass = false;
                            vc.detail += (vc.detail.empty() ? "" : "; ") + why;
                        };
                        long long N0 = max_truncation_N0(p, rho, eprime);
                        long long k = k_lambda(p, rho, eprime);
                        if (!p.empty()) {
                            long long want = rho == 0 ? -k - 1 : -k;
                            if (N0 != want)
                                fail("N0=" + std::to_string(N0) + " expected " + std::to_string(want));
                        }
                        for (long long N = N0 - 3; N <= N0; ++N) {
                            AbacusConfig a = to_abacus(p, rho, eprime, N);
                            if (a.bead_count() != rho - N * eprime) fail("bead count law at N=" + std::to_string(N));
                            auto [dec, ch] = from_abacus(a);
                            if (dec != p || ch != rho) fail("decode round trip at N=" + std::to_string(N));
                            AbacusConfig shifted_r = shift_beads(a, 1);
                            if (from_abacus(shifted_r).first != p) fail("right shift changed the partition");
                            if (!a.beads.empty() && a.beads.front() == N * eprime) {
                                AbacusConfig shifted_l = shift_beads(a, -1);
                                if (from_abacus(shifted_l).first != p) fail("left shift changed the partition");
                            }
                        }
                        return vc;
                    });
    }
    return collect("abacus-invariants", "n<=" + std::to_string(n_max), tasks, worker_count(workers));
}

// size and length laws plus the strip/tuple type-multiset correspondence
inline VerificationReport verify_structural_laws(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    tasks.push_back([=]() {
                        Multipartition mp{p};
                        Charge ch({rho}, {0});
                        VerificationCase vc{detail::case_name(mp, {rho}, eprime, 0), true, {}};
                        auto fail = [&](const std::string& why) {
                            vc.pass = false;
                            vc.detail += (vc.detail.empty() ? "" : "; ") + why;
                        };
                        BoxPlus plus = lambda_plus_box(mp, ch, eprime, 0);
                        long long zero_nodes = count_residue_nodes(mp, ch, eprime, 0);
                        if (plus.plus.size() != p.size() + zero_nodes) fail("size law");
                        long long k = k_lambda(p, rho, eprime);
                        if (plus.plus.comps[0].length() != p.length() + k) fail("length law");
                        auto strips = maximal_strips(mp, ch, eprime, 0);
                        long long nontrivial_high = 0;
                        for (const Strip& s : strips) {
                            if (!s.trivial && (s.type == 'c' || s.type == 'd')) ++nontrivial_high;
                            if ((s.type == 'c' || s.type == 'd') && s.nodes.front().c != 1)
                                fail("high strip not starting in column 1");
                            if ((s.type == 'a' || s.type == 'b') && s.nodes.front().r != 1)
                                fail("low strip not starting in row 1");
                        }
                        if (nontrivial_high != k) fail("k(lambda) vs nontrivial high strips");
                        std::map<Node, int> seen;
                        for (const Strip& s : strips)
                            for (const Node& nd : s.nodes) ++seen[nd];
                        for (const auto& [nd, c] : seen)
                            if (c != 1) fail("strip node covered " + std::to_string(c) + " times");
                        long long edge_nodes = 0;
                        for (const Node& nd : nodes_of(mp)) {
                            int r = residue(nd, rho, eprime);
                            if (r == 0 || r == 1 % eprime) ++edge_nodes;
                        }
                        if (static_cast<long long>(seen.size()) != edge_nodes) fail("strips miss edge nodes");
                        if (e >= 2) {
                            Loading idem = idempotent_loading(mp, ch, Quiver(e));
                            auto tuples = close_tuples(idem, 0);
                            std::multiset<char> strip_types, tuple_types;
                            for (const Strip& s : strips) strip_types.insert(s.type);
                            for (const CloseTuple& t : tuples) tuple_types.insert(t.type);
                            if (strip_types != tuple_types) fail("strip/tuple type multisets differ");
                        }
                        return vc;
                    });
    }
    return collect("structural-laws", "n<=" + std::to_string(n_max), tasks, worker_count(workers));
}

// signature(normalize(S(1_lam))) == signature(normalize(1_{lam+}))
inline VerificationReport verify_idempotents(int n_max, const std::vector<int>& e_set, int l2_samples,
                                             unsigned long long seed, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        if (e < 2) continue;
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    tasks.push_back([=]() {
                        return verify_idempotent_correspondence(Multipartition{p}, detail::spread_charge({rho}, n),
                                                                Quiver(e), 0);
                    });
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < l2_samples; ++s) {
        int e = e_set[rng() % e_set.size()];
        if (e < 2) e = 2;
        const int eprime = e + 1;
        std::uniform_int_distribution<int> size_dist(0, 6);
        int n = size_dist(rng);
        auto mps = multipartitions_of(n, 2);
        Multipartition mp = mps[rng() % mps.size()];
        std::vector<long long> rho = {static_cast<long long>(rng() % eprime), static_cast<long long>(rng() % eprime)};
        int edge = static_cast<int>(rng() % eprime);
        tasks.push_back(
            [=]() { return verify_idempotent_correspondence(mp, detail::spread_charge(rho, n), Quiver(e), edge); });
    }
    return collect("idempotent-correspondence", "n<=" + std::to_string(n_max) + " plus sampled 2-partitions", tasks,
                   worker_count(workers));
}

// deg S(D) == deg D for tableau diagrams and random matches
inline VerificationReport verify_degrees(int n_max, const std::vector<int>& e_set, int random_trials,
                                         unsigned long long seed, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        if (e < 2) continue;
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& lam : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    tasks.push_back([=]() {
                        Multipartition mp{lam};
                        Charge ch({rho}, {0});
                        Quiver q(e);
                        VerificationCase vc{detail::case_name(mp, {rho}, eprime, 0) + " tableaux", true, {}};
                        AffineData aff = affine_extend(ch, n, eprime);
                        Rat eps = default_eps(aff);
                        for (const Partition& mu : partitions_of(n))
                            for (const Tableau& t : enumerate_sstd(mp, Multipartition{mu}, ch, aff, eps)) {
                                StraightDiagram d = tableau_diagram(t, ch, q);
                                long long before = degree(d, q);
                                StraightDiagram sub = subdivide_diagram(d, SubdivisionParams{0, 0, 0});
                                long long after = degree(sub, Quiver(e + 1));
                                if (before != after) {
                                    vc.pass = false;
                                    vc.detail = "degree " + std::to_string(before) + " -> " + std::to_string(after);
                                    return vc;
                                }
                            }
                        return vc;
                    });
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < random_trials; ++trial) {
        int e = 2 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 6);
        auto parts = partitions_of(n);
        Partition lam = parts[rng() % parts.size()];
        Partition mu = parts[rng() % parts.size()];
        long long rho = static_cast<long long>(rng() % (e + 1));
        int edge = static_cast<int>(rng() % (e + 1));
        unsigned long long perm_seed = rng();
        tasks.push_back([=]() {
            Quiver q(e);
            Charge ch({rho}, {0});
            const int eprime = e + 1;
            Multipartition l{lam}, m{mu};
            VerificationCase vc{"random " + detail::case_name(l, {rho}, eprime, edge) + " -> " + partition_str(mu),
                                true,
                                {}};
            AffineData aff = affine_extend(ch, n, eprime);
            Rat eps = default_eps(aff);
            // random bijection realized as a tableau with shuffled targets
            std::vector<Rat> targets = coordinate_set(m, aff, eps);
            std::mt19937_64 g(perm_seed);
            std::shuffle(targets.begin(), targets.end(), g);
            Tableau t{l, targets};
            StraightDiagram d = tableau_diagram(t, ch, q);
            long long before = degree(d, q);
            StraightDiagram sub = subdivide_diagram(d, SubdivisionParams{edge, 0, 0});
            long long after = degree(sub, Quiver(e + 1));
            if (before != after) {
                vc.pass = false;
                vc.detail = "degree " + std::to_string(before) + " -> " + std::to_string(after);
            }
            return vc;
        });
    }
    return collect("degree-preservation",
                   "tableaux n<=" + std::to_string(n_max) + " plus " + std::to_string(random_trials) + " random",
                   tasks, worker_count(workers));
}

// enumerate_sstd counts match the exhaustive bijection filter
inline VerificationReport verify_sstd(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        if (e < 2) continue;
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& lam : partitions_of(n))
                for (const Partition& mu : partitions_of(n))
                    for (long long rho = 0; rho < eprime; ++rho)
                        tasks.push_back([=]() {
                            Multipartition l{lam}, m{mu};
                            Charge ch({rho}, {0});
                            VerificationCase vc{detail::case_name(l, {rho}, eprime, 0) + " type " + partition_str(mu),
                                                true,
                                                {}};
                            AffineData aff = affine_extend(ch, n, eprime);
                            Rat eps = default_eps(aff);
                            long long fast = static_cast<long long>(enumerate_sstd(l, m, ch, aff, eps).size());
                            long long brute = count_sstd_brute(l, m, ch, aff, eps);
                            if (fast != brute) {
                                vc.pass = false;
                                vc.detail =
                                    "backtracker " + std::to_string(fast) + " vs brute " + std::to_string(brute);
                            }
                            return vc;
                        });
    }
    return collect("semistandard-counts", "n<=" + std::to_string(n_max), tasks, worker_count(workers));
}

// normalize_right fixes 1_lam, is idempotent, and the subdivided-algebra
// loadings behave the same way
inline VerificationReport verify_normalizer(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        if (e < 2) continue;
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho < eprime; ++rho)
                    tasks.push_back([=]() {
                        Multipartition mp{p};
                        Charge ch({rho}, {0});
                        VerificationCase vc{detail::case_name(mp, {rho}, eprime, 0), true, {}};
                        auto fail = [&](const std::string& why) {
                            vc.pass = false;
                            vc.detail += (vc.detail.empty() ? "" : "; ") + why;
                        };
                        Loading idem = idempotent_loading(mp, ch, Quiver(e));
                        NormalizeResult once = normalize_right(idem);
                        if (!once.steady) fail("1_lam reported unsteady");
                        if (signature(once.loading) != signature(idem)) fail("normalize moved 1_lam");
                        NormalizeResult twice = normalize_right(once.loading);
                        if (signature(twice.loading) != signature(once.loading)) fail("normalize not idempotent");
                        Loading target = subdivided_idempotent_target(mp, ch, Quiver(e), 0);
                        NormalizeResult sub = normalize_right(target);
                        if (!sub.steady) fail("1_{lam+} reported unsteady");
                        if (signature(sub.loading) != signature(target)) fail("normalize moved 1_{lam+}");
                        return vc;
                    });
    }
    return collect("normalizer", "n<=" + std::to_string(n_max), tasks, worker_count(workers));
}

// hypothesis bookkeeping for the decomposition-number transport
inline VerificationReport verify_transport(int n_max, const std::vector<int>& e_set, int workers = 0) {
    std::vector<std::function<VerificationCase()>> tasks;
    for (int e : e_set) {
        const int eprime = e + 1;
        for (int n = 0; n <= n_max; ++n) {
            auto parts = partitions_of(n);
            for (const Partition& lam : parts)
                for (const Partition& mu : parts)
                    for (long long rho = 0; rho < eprime; ++rho)
                        tasks.push_back([=]() {
                            Multipartition l{lam}, m{mu};
                            Charge ch({rho}, {0});
                            VerificationCase vc{detail::case_name(l, {rho}, eprime, 0) + " mu=" + partition_str(mu),
                                                true,
                                                {}};
                            TransportResult tr = transport_labels(l, m, ch, eprime, 0);
                            bool expect = count_residue_nodes(l, ch, eprime, 0) <= 1 &&
                                          count_residue_nodes(m, ch, eprime, 0) <= 1;
                            if (tr.hypothesis_ok != expect ||
                                tr.lam_plus != lambda_plus(l, ch, eprime, 0).plus ||
                                tr.mu_plus != lambda_plus(m, ch, eprime, 0).plus) {
                                vc.pass = false;
                                vc.detail = "transport output inconsistent";
                            }
                            return vc;
                        });
        }
    }
    return collect("transport", "n<=" + std::to_string(n_max), tasks, worker_count(workers));
}

} // namespace klrw

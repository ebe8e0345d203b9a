#include "klrw/diagram.hpp"
#include "klrw/loading.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace klrw;

namespace {

Loading raw_loading(int vertices, std::vector<StringDesc> strings) {
    Loading l;
    l.vertices = vertices;
    l.strings = std::move(strings);
    l.sort_by_x();
    l.validate_distinct();
    return l;
}

} // namespace

TEST_CASE("affine extension") {
    AffineData a = affine_extend(Charge({1, 2}, {1, 2}), 7, 3);
    CHECK(a.ell_hat == 23);
    CHECK(a.kappa_hat[0] == 1);
    CHECK(a.kappa_hat[1] == 2);
    CHECK(a.kappa_hat[2] == 2 + 14);
    CHECK(a.kappa_hat[22] == 2 + 14 * 21);
    std::vector<int> rho_expect = {1, 2};
    for (int i = 0; i < 7; ++i) rho_expect.push_back(0);
    for (int i = 0; i < 7; ++i) rho_expect.push_back(1);
    for (int i = 0; i < 7; ++i) rho_expect.push_back(2);
    CHECK(a.rho_hat == rho_expect);
    for (std::size_t m = 1; m < a.kappa_hat.size(); ++m) CHECK(a.kappa_hat[m] > a.kappa_hat[m - 1]);

    AffineData zero = affine_extend(Charge({0}, {5}), 0, 3);
    CHECK(zero.ell_hat == 1);
    CHECK(zero.kappa_hat == std::vector<long long>{5});

    AffineData one = affine_extend(Charge({0}, {0}), 1, 2);
    CHECK(one.ell_hat == 3);
    CHECK(one.kappa_hat == std::vector<long long>{0, 2, 4});
}

TEST_CASE("positioning function") {
    AffineData a = affine_extend(Charge({1, 2}, {1, 2}), 7, 3);
    Rat eps = default_eps(a);
    CHECK(eps == Rat(1, 644));
    CHECK(position({1, 1, 1}, a, eps) == Rat(307, 322));
    CHECK(position({1, 2, 1}, a, eps) + 1 < position({1, 1, 1}, a, eps));
    CHECK(position({1, 1, 2}, a, eps) < position({1, 1, 1}, a, eps) + 1);
    CHECK_THROWS_AS(position({1, 1, 1}, a, Rat(1, 2)), std::invalid_argument);

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto mps = multipartitions_of(n, 2);
        Multipartition mp = mps[rng() % mps.size()];
        AffineData aff = affine_extend(Charge({0, 1}, {0, 3}), n, 4);
        Rat e2 = default_eps(aff);
        auto ns = nodes_of(mp);
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (std::size_t j = i + 1; j < ns.size(); ++j)
                CHECK(position(ns[i], aff, e2) != position(ns[j], aff, e2));
    }
}

TEST_CASE("idempotent loading signatures") {
    // (3,1,1|4), rho=(0,3), kappa=(0,3), e=3
    Loading eg = idempotent_loading(parse_multipartition("3,1,1|4"), Charge({0, 3}, {0, 3}), Quiver(3));
    CHECK(signature(eg) ==
          "s2 g2 s3 g3 s0 | r0 | s1 g0 s2 g1 s3 g2 | r3 | s0 g3 s1 g0 s2 g1 g2");

    // (2,2,2), rho=1, e=3
    Loading td = idempotent_loading(Multipartition{parse_partition("2,2,2")}, Charge({1}, {0}), Quiver(3));
    CHECK(signature(td) == "s3 s0 g3 s0 g0 s1 g0 s1 | r1 | g1 s2 g1 g2");

    Loading empty = idempotent_loading(parse_multipartition("|"), Charge({2, 0}, {0, 5}), Quiver(3));
    CHECK(signature(empty) == "| r2 | | r0 |");

    CHECK_THROWS_AS(idempotent_loading(Multipartition{parse_partition("1")}, Charge({0}, {0}), Quiver(1)),
                    std::invalid_argument);
}

TEST_CASE("normalize fixes idempotent loadings") {
    for (int e = 2; e <= 3; ++e)
        for (int n = 0; n <= 6; ++n)
            for (const Partition& p : partitions_of(n))
                for (long long rho = 0; rho <= e; ++rho) {
                    Loading idem = idempotent_loading(Multipartition{p}, Charge({rho}, {0}), Quiver(e));
                    NormalizeResult r = normalize_right(idem);
                    REQUIRE(r.steady);
                    CHECK(signature(r.loading) == signature(idem));
                    NormalizeResult again = normalize_right(r.loading);
                    CHECK(signature(again.loading) == signature(r.loading));
                }
}

TEST_CASE("steady and unsteady verdicts") {
    // single solid with a matching red to its right: pulled against it
    Loading steady = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                     {Kind::Red, 1, Rat(1, 4), -1, {}},
                                     {Kind::Ghost, 1, Rat(1, 2), 0, {}}});
    NormalizeResult rs = normalize_right(steady);
    CHECK(rs.steady);
    CHECK(signature(rs.loading) == "s1 | r1 | g1");

    // red of a different residue does not block
    Loading unsteady = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                       {Kind::Red, 2, Rat(1, 4), -1, {}},
                                       {Kind::Ghost, 1, Rat(1, 2), 0, {}}});
    CHECK_FALSE(normalize_right(unsteady).steady);
}

TEST_CASE("normalize pulls across free strings") {
    // the solid 2 crosses the whole free group on its way to the red 2
    Loading l = raw_loading(4, {{Kind::Solid, 2, Rat(0), 0, {}},
                                {Kind::Ghost, 2, Rat(1), 0, {}},
                                {Kind::Solid, 0, Rat(2), 1, {}},
                                {Kind::Ghost, 0, Rat(3), 1, {}},
                                {Kind::Red, 0, Rat(4), -1, {}},
                                {Kind::Red, 2, Rat(10), -1, {}}});
    NormalizeResult r = normalize_right(l);
    REQUIRE(r.steady);
    CHECK(signature(r.loading) == "s0 | r0 | g0 s2 | r2 | g2");
}

TEST_CASE("loading equivalence detects blocked flips") {
    Loading a = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                {Kind::Ghost, 1, Rat(1), 0, {}},
                                {Kind::Solid, 2, Rat(2), 1, {}},
                                {Kind::Ghost, 2, Rat(3), 1, {}}});
    // free rearrangement: solid 2 moved left of the solid 1
    Loading b = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                {Kind::Ghost, 1, Rat(1), 0, {}},
                                {Kind::Solid, 2, Rat(-2), 1, {}},
                                {Kind::Ghost, 2, Rat(-1), 1, {}}});
    CHECK(loading_equivalent(a, a).equal);
    CHECK_FALSE(loading_equivalent(a, b).equal); // solid 2 crossed the ghost 1

    Loading c = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                {Kind::Ghost, 1, Rat(5), 0, {}},
                                {Kind::Solid, 2, Rat(2), 1, {}},
                                {Kind::Ghost, 2, Rat(7), 1, {}}});
    CHECK(loading_equivalent(a, c).equal == false); // still a ghost-1/solid-2 flip
    Loading d = raw_loading(4, {{Kind::Solid, 1, Rat(1), 0, {}},
                                {Kind::Ghost, 1, Rat(2), 0, {}},
                                {Kind::Solid, 2, Rat(3), 1, {}},
                                {Kind::Ghost, 2, Rat(5), 1, {}}});
    CHECK(loading_equivalent(a, d).equal); // same order, different coordinates
}

TEST_CASE("degree rules") {
    Loading idem = idempotent_loading(Multipartition{parse_partition("3,1")}, Charge({2}, {0}), Quiver(3));
    CHECK(degree(identity_diagram(idem), Quiver(3)) == 0);

    // two same-residue solids swapping
    Loading bot = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                  {Kind::Ghost, 1, Rat(10), 0, {}},
                                  {Kind::Solid, 1, Rat(1), 1, {}},
                                  {Kind::Ghost, 1, Rat(11), 1, {}}});
    StraightDiagram swap = straight_diagram(bot, bot, {{0, 1}, {1, 0}});
    CHECK(degree(swap, Quiver(3)) == -2);

    // solid crossing its red
    Loading redl = raw_loading(4, {{Kind::Solid, 1, Rat(0), 0, {}},
                                   {Kind::Ghost, 1, Rat(10), 0, {}},
                                   {Kind::Red, 1, Rat(1), -1, {}}});
    Loading redr = raw_loading(4, {{Kind::Solid, 1, Rat(2), 0, {}},
                                   {Kind::Ghost, 1, Rat(12), 0, {}},
                                   {Kind::Red, 1, Rat(1), -1, {}}});
    StraightDiagram over = straight_diagram(redl, redr, {{0, 0}});
    CHECK(degree(over, Quiver(3)) == 1);

    // ghost i over solid i+1: the sign the double-crossing relation forces
    Loading gl = raw_loading(4, {{Kind::Solid, 0, Rat(0), 0, {}},
                                 {Kind::Ghost, 0, Rat(1), 0, {}},
                                 {Kind::Solid, 1, Rat(2), 1, {}},
                                 {Kind::Ghost, 1, Rat(10), 1, {}}});
    Loading gr = raw_loading(4, {{Kind::Solid, 0, Rat(4), 0, {}},
                                 {Kind::Ghost, 0, Rat(5), 0, {}},
                                 {Kind::Solid, 1, Rat(2), 1, {}},
                                 {Kind::Ghost, 1, Rat(10), 1, {}}});
    StraightDiagram gcross = straight_diagram(gl, gr, {{0, 0}, {1, 1}});
    CHECK(degree(gcross, Quiver(3)) == 1);

    CHECK_THROWS_AS(straight_diagram(gl, redl, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("degree is invariant under reversal") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int e = 2 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 5);
        auto ps = partitions_of(n);
        Partition lam = ps[rng() % ps.size()];
        long long rho = static_cast<long long>(rng() % (e + 1));
        Loading l = idempotent_loading(Multipartition{lam}, Charge({rho}, {0}), Quiver(e));
        // random same-residue-preserving permutation of solids
        std::map<int, std::vector<int>> by_res;
        for (const auto& s : l.strings)
            if (s.kind == Kind::Solid) by_res[s.residue].push_back(s.group);
        std::map<int, int> match;
        for (auto& [res, groups] : by_res) {
            auto shuffled = groups;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (std::size_t i = 0; i < groups.size(); ++i) match[groups[i]] = shuffled[i];
        }
        StraightDiagram d = straight_diagram(l, l, match);
        CHECK(degree(d, Quiver(e)) == degree(reversed(d), Quiver(e)));
    }
}

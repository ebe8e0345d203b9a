#include "klrw/partition.hpp"
#include "klrw/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace klrw;

TEST_CASE("partition text formats round-trip") {
    CHECK(parse_partition("4,3,2").parts == std::vector<int>{4, 3, 2});
    CHECK(parse_partition("1^9").parts == std::vector<int>(9, 1));
    CHECK(parse_partition("").parts.empty());
    CHECK(parse_partition("5, 3,3, 2,1").parts == std::vector<int>{5, 3, 3, 2, 1});
    CHECK(multipartition_str(parse_multipartition("3,1,1|4")) == "3,1,1|4");
    CHECK(parse_multipartition("|").levels() == 2);
    CHECK(parse_partition("0").empty()); // trailing zero parts are dropped
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng() % 12);
        auto ps = partitions_of(n);
        Partition p = ps[rng() % ps.size()];
        CHECK(parse_partition(partition_str(p)) == p);
        Multipartition mp({p, ps[rng() % ps.size()]});
        CHECK(parse_multipartition(multipartition_str(mp)) == mp);
        CHECK(multipartition_from_json(to_json(mp)) == mp);
    }
}

TEST_CASE("residues of nodes") {
    CHECK(residue({1, 1, 1}, 0, 4) == 0);
    CHECK(residue({1, 2, 1}, 3, 4) == 2);

    // (3,1,1|4) with rho=(0,3) at e'=4
    Multipartition mp = parse_multipartition("3,1,1|4");
    Charge ch({0, 3}, {0, 3});
    ResidueDiagram d = residue_diagram(mp, ch, 4);
    CHECK(d.rows[0] == std::vector<std::vector<int>>{{0, 1, 2}, {3}, {2}});
    CHECK(d.rows[1] == std::vector<std::vector<int>>{{3, 0, 1, 2}});

    // (2,2,2) with rho=1
    ResidueDiagram t = residue_diagram(Multipartition{parse_partition("2,2,2")}, Charge({1}, {0}), 4);
    CHECK(t.rows[0] == std::vector<std::vector<int>>{{1, 2}, {0, 1}, {3, 0}});

    CHECK(residue_diagram(Multipartition{Partition{}}, Charge({0}, {0}), 4).rows[0].empty());
}

TEST_CASE("residues increase along rows and decrease down columns") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto ps = partitions_of(n);
        Partition p = ps[rng() % ps.size()];
        int eprime = 2 + static_cast<int>(rng() % 5);
        long long rho = static_cast<long long>(rng() % eprime);
        Multipartition mp{p};
        for (const Node& nd : nodes_of(mp)) {
            int r = residue(nd, rho, eprime);
            if (contains(mp, {nd.m, nd.r, nd.c + 1}))
                CHECK(residue({nd.m, nd.r, nd.c + 1}, rho, eprime) == mod_res(r + 1, eprime));
            if (contains(mp, {nd.m, nd.r + 1, nd.c}))
                CHECK(residue({nd.m, nd.r + 1, nd.c}, rho, eprime) == mod_res(r - 1, eprime));
        }
        // last node of each nonempty row matches the beta number mod e'
        auto beta = beta_numbers(p, rho, p.length() + 1);
        for (int r = 1; r <= p.length(); ++r)
            CHECK(residue({1, r, p.part(r)}, rho, eprime) == mod_res(beta[r - 1], eprime));
    }
}

TEST_CASE("beta numbers") {
    CHECK(beta_numbers(parse_partition("4,4,4,4"), 1, 6) == std::vector<long long>{4, 3, 2, 1, -4, -5});
    CHECK(beta_numbers(Partition{}, 0, 3) == std::vector<long long>{-1, -2, -3});
    CHECK(beta_numbers(parse_partition("4,3,2"), 3, 5) == std::vector<long long>{6, 4, 2, -1, -2});
    CHECK_THROWS_AS(beta_numbers(parse_partition("2,1"), 0, 1), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng() % 10);
        auto ps = partitions_of(n);
        Partition p = ps[rng() % ps.size()];
        long long rho = static_cast<long long>(rng() % 7) - 3;
        auto beta = beta_numbers(p, rho, p.length() + 4);
        for (std::size_t i = 1; i < beta.size(); ++i) CHECK(beta[i] < beta[i - 1]);
        for (int i = p.length() + 1; i <= p.length() + 4; ++i) CHECK(beta[i - 1] == rho - i);
    }
}

TEST_CASE("counting residue nodes") {
    Charge ch1({1}, {0});
    CHECK(count_residue_nodes(Multipartition{parse_partition("2,2,2")}, ch1, 4, 0) == 2);
    CHECK(count_residue_nodes(Multipartition{Partition{}}, Charge({0}, {0}), 4, 2) == 0);
    CHECK(count_residue_nodes(Multipartition{parse_partition("4,4,4,4")}, ch1, 4, 0) == 4);
}

TEST_CASE("partition enumeration matches known counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(10).size() == 42);
    CHECK(multipartitions_of(3, 2).size() == 10);
}

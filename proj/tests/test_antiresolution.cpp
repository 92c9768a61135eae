#include "antidim/antiresolution.hpp"
#include "antidim/error.hpp"
#include "antidim/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace antidim;

namespace {
    auto class_sizes(const ArsPartition & p) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> sizes;
        for (auto & c : p.classes)
            sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    auto throws_code(auto && f, Errc code) -> bool
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code() == code;
        }
        return false;
    }
}

TEST_CASE("partition of the 4-cycle from one vertex")
{
    auto dm = all_pairs_distances(cycle_graph(4));
    VertexSet s{ 1 };
    auto p = partition_by_rs(dm, s);
    CHECK(p.subject == VertexSet{ 1 });
    CHECK(p.classes == std::vector<VertexSet>{ { 2, 4 }, { 3 } });
    CHECK(p.min_class_size == 1);
}

TEST_CASE("two diagonal vertices of K4 x K4 give a 2-antiresolving set")
{
    auto dm = all_pairs_distances(build_family(FamilySpec::hamming2(4)));
    VertexSet s{ product_vertex(1, 1, 4), product_vertex(2, 2, 4) };
    auto p = partition_by_rs(dm, s);
    VertexSet swapped{ product_vertex(1, 2, 4), product_vertex(2, 1, 4) };
    CHECK(std::find(p.classes.begin(), p.classes.end(), swapped) != p.classes.end());
    CHECK(p.min_class_size == 2);
}

TEST_CASE("one vertex of the 5x5 torus")
{
    auto dm = all_pairs_distances(build_family(FamilySpec::torus(5, 5)));
    for (Vertex v = 1; v <= 25; ++v) {
        VertexSet s{ v };
        auto p = partition_by_rs(dm, s);
        CHECK(class_sizes(p) == std::vector<std::size_t>{ 4, 4, 8, 8 });
        CHECK(is_k_ars(dm, s, 4, Semantics::Exact));
        CHECK_FALSE(is_k_ars(dm, s, 3, Semantics::Exact));
        CHECK(is_k_ars(dm, s, 3, Semantics::AtLeast));
        CHECK_FALSE(is_k_ars(dm, s, 5, Semantics::AtLeast));
    }
}

TEST_CASE("k_of examples")
{
    // Middle row of the 5x5 cylinder, first column.
    auto cyl = all_pairs_distances(build_family(FamilySpec::cylinder(5, 5)));
    VertexSet central{ product_vertex(3, 1, 5) };
    CHECK(k_of(cyl, central) == 4);

    auto p3 = all_pairs_distances(path_graph(3));
    VertexSet middle{ 2 };
    CHECK(k_of(p3, middle) == 2);
    CHECK(partition_by_rs(p3, middle).classes == std::vector<VertexSet>{ { 1, 3 } });

    auto k5 = all_pairs_distances(complete_graph(5));
    VertexSet one{ 1 };
    CHECK(k_of(k5, one) == 4);
}

TEST_CASE("invalid subjects and k")
{
    auto dm = all_pairs_distances(cycle_graph(4));
    VertexSet empty, full{ 1, 2, 3, 4 }, outside{ 5 }, one{ 1 };
    CHECK(throws_code([&] { partition_by_rs(dm, empty); }, Errc::EmptySet));
    CHECK(throws_code([&] { partition_by_rs(dm, full); }, Errc::FullSet));
    CHECK(throws_code([&] { partition_by_rs(dm, outside); }, Errc::IndexOutOfRange));
    CHECK(throws_code([&] { is_k_ars(dm, one, 0, Semantics::Exact); }, Errc::InvalidK));
    // Duplicates collapse, so {1,1,2,2,3,3,4} is still the full set.
    VertexSet dup_full{ 1, 1, 2, 2, 3, 3, 4 };
    CHECK(throws_code([&] { partition_by_rs(dm, dup_full); }, Errc::FullSet));
}

TEST_CASE("partition agrees with the map-based oracle on every subset")
{
    std::vector<Graph> corpus{ path_graph(6), cycle_graph(7), complete_graph(5),
        build_family(FamilySpec::grid(3, 3)), build_family(FamilySpec::cylinder(2, 4)),
        build_family(FamilySpec::torus(3, 3)) };
    for (auto & g : corpus) {
        auto dm = all_pairs_distances(g);
        auto fw = oracle::floyd_warshall(g);
        auto n = g.order();
        auto full = (std::uint64_t{ 1 } << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            auto s = oracle::from_mask(mask);
            auto p = partition_by_rs(dm, s);
            std::vector<VertexSet> expected;
            for (auto & c : oracle::classes_of(fw, mask))
                expected.emplace_back(c.begin(), c.end());
            std::sort(expected.begin(), expected.end());
            REQUIRE(p.classes == expected);
            REQUIRE(p.min_class_size == oracle::min_class(fw, mask));

            // Structural invariants.
            std::size_t covered = 0;
            for (auto & c : p.classes) {
                REQUIRE(std::is_sorted(c.begin(), c.end()));
                covered += c.size();
            }
            REQUIRE(covered + s.size() == n);
            REQUIRE(s.size() <= n - p.min_class_size);
            REQUIRE(p.classes.size() * p.min_class_size <= n - s.size());
        }
    }
}

TEST_CASE("refinement: a superset splits classes, never merges them")
{
    auto dm = all_pairs_distances(build_family(FamilySpec::grid(3, 4)));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t small = rng() & 0xFFF, extra = rng() & 0xFFF;
        auto big = small | extra;
        if (small == 0 || big == 0xFFF)
            continue;
        auto coarse = partition_by_rs(dm, oracle::from_mask(small));
        auto fine = partition_by_rs(dm, oracle::from_mask(big));
        for (auto & c : fine.classes) {
            auto home = std::find_if(coarse.classes.begin(), coarse.classes.end(),
                [&](const VertexSet & k) { return std::binary_search(k.begin(), k.end(), c.front()); });
            REQUIRE(home != coarse.classes.end());
            for (auto v : c)
                REQUIRE(std::binary_search(home->begin(), home->end(), v));
        }
    }
}

TEST_CASE("partition does not depend on the order of S")
{
    auto dm = all_pairs_distances(build_family(FamilySpec::cylinder(3, 5)));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        VertexSet s;
        for (Vertex v = 1; v <= 15; ++v)
            if (rng() % 4 == 0)
                s.push_back(v);
        if (s.empty() || s.size() == 15)
            continue;
        auto reference = partition_by_rs(dm, s);
        std::shuffle(s.begin(), s.end(), rng);
        auto shuffled = partition_by_rs(dm, s);
        REQUIRE(shuffled.classes == reference.classes);
        REQUIRE(shuffled.subject == reference.subject);
    }
}

TEST_CASE("largest min class size over all subsets is at most the maximum degree")
{
    std::vector<Graph> corpus{ path_graph(8), cycle_graph(9), complete_graph(6), build_family(FamilySpec::grid(2, 5)),
        build_family(FamilySpec::grid(3, 3)), build_family(FamilySpec::cylinder(2, 5)),
        build_family(FamilySpec::torus(3, 3)),
        Graph::from_edge_list(10,
            std::vector<Edge>{ { 1, 2 }, { 1, 3 }, { 1, 4 }, { 1, 5 }, { 2, 6 }, { 3, 7 }, { 4, 8 }, { 5, 9 },
                { 9, 10 } }) };
    for (auto & g : corpus) {
        auto dm = all_pairs_distances(g);
        std::size_t best = 0;
        auto n = g.order();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{ 1 } << n); ++mask)
            best = std::max(best, k_of(dm, oracle::from_mask(mask)));
        CHECK(best <= max_degree(g));
    }
}

TEST_CASE("n/k - 1 does not bound the number of classes")
{
    // The 7-cycle seen from one vertex: three classes of two, while
    // n/k - 1 = 2.5. The sound bound is (n - |S|)/k = 3.
    auto dm = all_pairs_distances(cycle_graph(7));
    VertexSet one{ 1 };
    auto p = partition_by_rs(dm, one);
    CHECK(p.min_class_size == 2);
    CHECK(p.classes.size() == 3);
    CHECK(2 * p.classes.size() > 7 - 2);
}

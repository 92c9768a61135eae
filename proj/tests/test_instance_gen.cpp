#include "antidim/antiresolution.hpp"
#include "antidim/error.hpp"
#include "antidim/instance_gen.hpp"
#include "antidim/solver.hpp"

#include <doctest.h>

#include <sstream>

using namespace antidim;

namespace {
    auto text_of(const GenSpec & spec) -> std::string
    {
        std::ostringstream out;
        std::vector<std::string> header{ gen_header(spec) };
        write_edge_list(out, generate(spec), header);
        return out.str();
    }
}

TEST_CASE("splitmix64 reference outputs")
{
    // Published test vector for seed 1234567.
    Prng rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
    CHECK(rng.next() == 4593380528125082431ull);
    CHECK(rng.next() == 16408922859458223821ull);
}

TEST_CASE("uniform_below stays in range and always draws")
{
    Prng rng(42);
    for (std::uint64_t m : { 1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5 }) {
        for (int i = 0; i < 200; ++i) {
            auto before = rng.state();
            CHECK(rng.uniform_below(m) < m);
            CHECK(rng.state() != before);
        }
    }
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i)
        ++counts[rng.uniform_between(1, 6) - 1];
    for (auto c : counts) {
        CHECK(c > 9500);
        CHECK(c < 10500);
    }
}

TEST_CASE("tree generator")
{
    auto two = gen_tree({ InstanceClass::Tree, 2, 5, 99 });
    CHECK(two.edges() == std::vector<Edge>{ { 1, 2 } });
    for (std::size_t n : { 2, 3, 10, 50, 100 })
        for (std::size_t delta : { 2, 3, 6 })
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto t = gen_tree({ InstanceClass::Tree, n, delta, seed });
                CHECK(t.order() == n);
                CHECK(t.size() == n - 1);
                CHECK(is_connected(t));
                CHECK(max_degree(t) <= delta);
            }
    CHECK(gen_tree({ InstanceClass::Tree, 50, 6, 1 }).size() == 49);
}

TEST_CASE("sparse generator")
{
    for (std::size_t n : { 5, 20, 50 })
        for (std::size_t delta : { 2, 3, 5 })
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto g = gen_sparse({ InstanceClass::Sparse, n, delta, seed });
                CHECK(g.order() == n);
                CHECK(is_connected(g));
                for (auto [u, v] : g.edges()) {
                    CHECK(u < v);
                    CHECK(g.adjacent(v, u));
                }
            }
}

TEST_CASE("dense generator")
{
    auto g = gen_dense({ InstanceClass::Dense, 50, 45, 1 });
    CHECK(g.size() == 1180);
    CHECK(min_degree(g) >= 50 - 1 - 45);
    CHECK(gen_dense({ InstanceClass::Dense, 6, 0, 3 }).size() == 15);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto d = gen_dense({ InstanceClass::Dense, 8, 12, seed });
        CHECK(d.size() == 28 - 12);
        CHECK(is_connected(d));
    }
}

TEST_CASE("generation is reproducible")
{
    for (auto spec : { GenSpec{ InstanceClass::Tree, 40, 4, 17 }, GenSpec{ InstanceClass::Sparse, 40, 3, 17 },
             GenSpec{ InstanceClass::Dense, 40, 30, 17 } }) {
        CHECK(text_of(spec) == text_of(spec));
        auto other = spec;
        other.seed = 18;
        CHECK(text_of(spec) != text_of(other));
    }
    CHECK(gen_header({ InstanceClass::Dense, 50, 45, 1 }) == "gen class=D n=50 delta=45 seed=1");
}

TEST_CASE("invalid specs")
{
    CHECK_THROWS_AS(generate({ InstanceClass::Tree, 1, 3, 1 }), Error);
    CHECK_THROWS_AS(generate({ InstanceClass::Tree, 10, 1, 1 }), Error);
    CHECK_THROWS_AS(generate({ InstanceClass::Sparse, 10, 1, 1 }), Error);
    // K_6 has 15 edges; removing 10 would leave fewer than the 5 a tree needs.
    CHECK_THROWS_AS(generate({ InstanceClass::Dense, 6, 10, 1 }), Error);
    CHECK_NOTHROW(generate({ InstanceClass::Dense, 6, 9, 1 }));
    CHECK(parse_instance_class("S") == InstanceClass::Sparse);
    CHECK_THROWS_AS(parse_instance_class("X"), Error);
}

TEST_CASE("generated instances never exceed the degree bound on class sizes")
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        for (auto spec : { GenSpec{ InstanceClass::Tree, 13, 3, seed }, GenSpec{ InstanceClass::Sparse, 12, 2, seed },
                 GenSpec{ InstanceClass::Dense, 11, 15, seed } }) {
            auto g = generate(spec);
            auto dm = all_pairs_distances(g);
            auto n = g.order();
            std::size_t best = 0;
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{ 1 } << n); ++mask) {
                VertexSet s;
                for (Vertex v = 1; v <= n; ++v)
                    if (mask >> (v - 1) & 1)
                        s.push_back(v);
                best = std::max(best, k_of(dm, s));
            }
            CHECK(best <= max_degree(g));
        }
}

TEST_CASE("frozen instances")
{
    // Produced by a separate implementation of the same procedures.
    auto pairs = [](const Graph & g) {
        std::string s;
        for (auto [u, v] : g.edges())
            s += std::to_string(u) + " " + std::to_string(v) + "|";
        return s;
    };
    CHECK(pairs(generate({ InstanceClass::Tree, 12, 3, 1 })) == "1 2|1 3|1 4|2 5|2 6|3 7|4 8|4 9|5 10|5 11|6 12|");
    CHECK(pairs(generate({ InstanceClass::Sparse, 10, 3, 2 }))
        == "1 2|1 5|1 7|1 10|2 8|2 10|3 7|3 8|3 9|4 6|4 8|4 9|4 10|6 10|7 9|9 10|");
    CHECK(pairs(generate({ InstanceClass::Dense, 8, 6, 3 }))
        == "1 2|1 3|1 4|1 6|1 7|1 8|2 3|2 4|2 7|2 8|3 5|3 6|3 8|4 5|4 6|4 7|4 8|5 6|5 7|5 8|6 8|7 8|");
}

#include "antidim/instance_gen.hpp"

#include "antidim/error.hpp"

#include <numeric>
#include <vector>

namespace antidim {

namespace {
    constexpr int max_retries = 64;

    auto edge_count_complete(std::size_t n) -> std::size_t { return n * (n - 1) / 2; }
}

auto Prng::uniform_below(std::uint64_t m) -> std::uint64_t
{
    // 2^64 mod m, computed without 128-bit arithmetic.
    auto remainder = (0 - m) % m;
    for (;;) {
        auto z = next();
        if (remainder == 0 || z < 0 - remainder)
            return z % m;
    }
}

auto to_string(InstanceClass c) -> const char *
{
    switch (c) {
        case InstanceClass::Tree: return "T";
        case InstanceClass::Sparse: return "S";
        case InstanceClass::Dense: return "D";
    }
    return "?";
}

auto parse_instance_class(const std::string & text) -> InstanceClass
{
    if (text == "T")
        return InstanceClass::Tree;
    if (text == "S")
        return InstanceClass::Sparse;
    if (text == "D")
        return InstanceClass::Dense;
    throw Error(Errc::ParseError, "instance class must be T, S or D, got '" + text + "'");
}

auto validate(const GenSpec & spec) -> void
{
    if (spec.n < 2)
        throw Error(Errc::InvalidSpec, "instances need n >= 2");
    switch (spec.instance_class) {
        case InstanceClass::Tree:
        case InstanceClass::Sparse:
            if (spec.delta < 2)
                throw Error(Errc::InvalidSpec, "delta must be at least 2");
            return;
        case InstanceClass::Dense:
            if (spec.delta >= edge_count_complete(spec.n) - (spec.n - 1))
                throw Error(Errc::InvalidSpec, "removing delta edges would leave fewer than n - 1");
            return;
    }
}

auto gen_tree(const GenSpec & spec) -> Graph
{
    validate(spec);
    if (spec.instance_class != InstanceClass::Tree)
        throw Error(Errc::InvalidSpec, "gen_tree needs class T");

    Prng rng(spec.seed);
    std::vector<Edge> edges;
    std::vector<Vertex> queue{ 1 };
    Vertex next_free = 2;
    for (std::size_t head = 0; head < queue.size() && next_free <= spec.n; ++head) {
        auto u = queue[head];
        auto slots = u == 1 ? spec.delta : spec.delta - 1;
        auto children = std::min<std::uint64_t>(rng.uniform_between(1, slots), spec.n - next_free + 1);
        for (std::uint64_t c = 0; c < children; ++c) {
            edges.emplace_back(u, next_free);
            queue.push_back(next_free++);
        }
    }
    return Graph::from_edge_list(spec.n, edges);
}

auto gen_sparse(const GenSpec & spec) -> Graph
{
    validate(spec);
    if (spec.instance_class != InstanceClass::Sparse)
        throw Error(Errc::InvalidSpec, "gen_sparse needs class S");

    Prng rng(spec.seed);
    auto n = spec.n;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<Edge> edges;
        std::vector<bool> queued(n + 1, false);
        std::vector<Vertex> queue;
        Vertex lowest_unqueued = 1;

        while (queue.size() < n) {
            while (queued[lowest_unqueued])
                ++lowest_unqueued;
            queue.push_back(lowest_unqueued);
            queued[lowest_unqueued] = true;

            for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
                auto u = queue[head];
                auto count = rng.uniform_between(1, spec.delta);
                for (std::uint64_t c = 0; c < count; ++c) {
                    // Uniform over V \ {u}: draw from n - 1 values and skip u.
                    auto v = static_cast<Vertex>(rng.uniform_below(n - 1) + 1);
                    if (v >= u)
                        ++v;
                    edges.emplace_back(u, v);
                    if (! queued[v]) {
                        queued[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }

        auto g = Graph::from_edge_list(n, edges);
        if (is_connected(g))
            return g;
    }
    throw Error(Errc::GenerationFailed, "no connected sparse graph after retries");
}

auto gen_dense(const GenSpec & spec) -> Graph
{
    validate(spec);
    if (spec.instance_class != InstanceClass::Dense)
        throw Error(Errc::InvalidSpec, "gen_dense needs class D");

    auto n = spec.n;
    std::vector<Edge> all;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            all.emplace_back(u, v);

    Prng rng(spec.seed);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<std::size_t> index(all.size());
        std::iota(index.begin(), index.end(), std::size_t{ 0 });
        for (std::size_t i = 0; i < spec.delta; ++i) {
            auto j = i + rng.uniform_below(index.size() - i);
            std::swap(index[i], index[j]);
        }

        std::vector<bool> removed(all.size(), false);
        for (std::size_t i = 0; i < spec.delta; ++i)
            removed[index[i]] = true;
        std::vector<Edge> kept;
        for (std::size_t e = 0; e < all.size(); ++e)
            if (! removed[e])
                kept.push_back(all[e]);

        auto g = Graph::from_edge_list(n, kept);
        if (is_connected(g))
            return g;
    }
    throw Error(Errc::GenerationFailed, "no connected dense graph after retries");
}

auto generate(const GenSpec & spec) -> Graph
{
    switch (spec.instance_class) {
        case InstanceClass::Tree: return gen_tree(spec);
        case InstanceClass::Sparse: return gen_sparse(spec);
        case InstanceClass::Dense: return gen_dense(spec);
    }
    throw Error(Errc::InvalidSpec, "unknown instance class");
}

auto gen_header(const GenSpec & spec) -> std::string
{
    return std::string("gen class=") + to_string(spec.instance_class) + " n=" + std::to_string(spec.n)
        + " delta=" + std::to_string(spec.delta) + " seed=" + std::to_string(spec.seed);
}

} // namespace antidim

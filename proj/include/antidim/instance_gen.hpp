#pragma once

#include "antidim/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace antidim {

/// splitmix64. Fixed so that any implementation regenerates the same
/// instances from the same seed.
class Prng
{
public:
    explicit Prng(std::uint64_t seed) : _state(seed) {}

    auto next() -> std::uint64_t
    {
        _state += 0x9E3779B97F4A7C15ull;
        auto z = _state;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, m) by rejection; always consumes at least one output.
    auto uniform_below(std::uint64_t m) -> std::uint64_t;

    /// Uniform in [lo, hi].
    auto uniform_between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t { return lo + uniform_below(hi - lo + 1); }

    auto state() const -> std::uint64_t { return _state; }

private:
    std::uint64_t _state;
};

enum class InstanceClass { Tree, Sparse, Dense };

auto to_string(InstanceClass c) -> const char *;
auto parse_instance_class(const std::string & text) -> InstanceClass;

struct GenSpec
{
    InstanceClass instance_class;
    std::size_t n;
    /// Tree: maximum degree. Sparse: per-vertex bound on drawn end-vertices.
    /// Dense: number of edges removed from K_n.
    std::size_t delta;
    std::uint64_t seed;
};

/// Throws Errc::InvalidSpec if the parameters cannot yield a connected graph.
auto validate(const GenSpec & spec) -> void;

/// Rooted at 1, vertices explored first-in first-out. The root draws
/// 1..delta children, every later vertex 1..delta-1 (its parent edge uses a
/// degree slot), capped by the vertices still unplaced; children take the
/// next unplaced indices.
auto gen_tree(const GenSpec & spec) -> Graph;

/// Vertices explored first-in first-out from 1 (falling back to the lowest
/// unexplored vertex if the queue empties); each draws 1..delta end-vertices
/// uniformly from V \ {u}. Self-loops and repeats are dropped. Disconnected
/// draws are retried on the continuing stream, at most 64 times.
auto gen_sparse(const GenSpec & spec) -> Graph;

/// K_n minus delta distinct edges chosen by a partial Fisher-Yates shuffle
/// of the lexicographically ordered edge list, retried like gen_sparse.
auto gen_dense(const GenSpec & spec) -> Graph;

auto generate(const GenSpec & spec) -> Graph;

/// "gen class=<T|S|D> n=<n> delta=<d> seed=<s>"
auto gen_header(const GenSpec & spec) -> std::string;

} // namespace antidim

#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the Graph type: distances come from Floyd-Warshall,
// classes from a std::map over explicit distance vectors, and optima from
// plain bitmask enumeration without pruning.

#include "antidim/graph.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<unsigned>>;

inline auto floyd_warshall(const antidim::Graph & g) -> Matrix
{
    auto n = g.order();
    constexpr unsigned inf = std::numeric_limits<unsigned>::max() / 4;
    Matrix d(n, std::vector<unsigned>(n, inf));
    for (std::size_t u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (auto v : g.neighbours(static_cast<antidim::Vertex>(u + 1)))
            d[u][v - 1] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (d[u][m] + d[m][v] < d[u][v])
                    d[u][v] = d[u][m] + d[m][v];
    return d;
}

// Classes of R_S for S given as a bitmask over vertices 1..n (bit u-1).
inline auto classes_of(const Matrix & d, std::uint64_t subject) -> std::vector<std::vector<unsigned>>
{
    std::map<std::vector<unsigned>, std::vector<unsigned>> groups;
    auto n = d.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (subject >> x & 1)
            continue;
        std::vector<unsigned> key;
        for (std::size_t z = 0; z < n; ++z)
            if (subject >> z & 1)
                key.push_back(d[x][z]);
        groups[key].push_back(static_cast<unsigned>(x + 1));
    }
    std::vector<std::vector<unsigned>> result;
    for (auto & [key, members] : groups)
        result.push_back(members);
    return result;
}

inline auto min_class(const Matrix & d, std::uint64_t subject) -> std::size_t
{
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto & c : classes_of(d, subject))
        best = std::min(best, c.size());
    return best;
}

inline auto to_mask(const std::vector<antidim::Vertex> & set) -> std::uint64_t
{
    std::uint64_t mask = 0;
    for (auto v : set)
        mask |= std::uint64_t{ 1 } << (v - 1);
    return mask;
}

inline auto from_mask(std::uint64_t mask) -> std::vector<antidim::Vertex>
{
    std::vector<antidim::Vertex> set;
    for (unsigned v = 0; mask >> v; ++v)
        if (mask >> v & 1)
            set.push_back(v + 1);
    return set;
}

// Minimum |S| with min class size == k (exact) or >= k, by enumerating
// every non-empty proper subset. nullopt means no such S.
inline auto brute_adim(const Matrix & d, std::size_t k, bool exact) -> std::optional<std::size_t>
{
    auto n = d.size();
    std::optional<std::size_t> best;
    std::uint64_t full = (std::uint64_t{ 1 } << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (best && size >= *best)
            continue;
        auto m = min_class(d, mask);
        if (exact ? m == k : m >= k)
            best = size;
    }
    return best;
}

// Lexicographically first S among minimum-cardinality qualifying sets.
inline auto brute_witness(const Matrix & d, std::size_t k, bool exact) -> std::vector<antidim::Vertex>
{
    auto size = brute_adim(d, k, exact);
    if (! size)
        return {};
    auto n = d.size();
    std::vector<antidim::Vertex> best;
    std::uint64_t full = (std::uint64_t{ 1 } << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != *size)
            continue;
        auto m = min_class(d, mask);
        if (exact ? m == k : m >= k) {
            auto set = from_mask(mask);
            if (best.empty() || set < best)
                best = set;
        }
    }
    return best;
}

inline auto brute_kappa(const Matrix & d) -> std::size_t
{
    auto n = d.size();
    std::size_t best = 0;
    std::uint64_t full = (std::uint64_t{ 1 } << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask)
        best = std::max(best, min_class(d, mask));
    return best;
}

} // namespace oracle

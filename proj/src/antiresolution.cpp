#include "antidim/antiresolution.hpp"

#include "antidim/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace antidim {

auto normalise_subject(std::size_t n, std::span<const Vertex> subject) -> VertexSet
{
    VertexSet s(subject.begin(), subject.end());
    for (auto v : s)
        if (v < 1 || v > n)
            throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty())
        throw Error(Errc::EmptySet, "S must be non-empty");
    if (s.size() == n)
        throw Error(Errc::FullSet, "S = V leaves no vertex to classify");
    return s;
}

auto partition_by_rs(const DistanceMatrix & dm, std::span<const Vertex> subject) -> ArsPartition
{
    auto n = dm.order();
    ArsPartition result;
    result.subject = normalise_subject(n, subject);
    const auto & s = result.subject;

    std::vector<bool> in_s(n + 1, false);
    for (auto v : s)
        in_s[v] = true;

    VertexSet outside;
    for (Vertex x = 1; x <= n; ++x)
        if (! in_s[x])
            outside.push_back(x);

    // Lexicographic order on distance vectors, ties by vertex index; equal
    // vectors then form contiguous runs.
    auto compare = [&](Vertex x, Vertex y) {
        for (auto z : s) {
            auto dx = dm(x, z), dy = dm(y, z);
            if (dx != dy)
                return dx < dy;
        }
        return x < y;
    };
    auto same = [&](Vertex x, Vertex y) {
        return std::all_of(s.begin(), s.end(), [&](Vertex z) { return dm(x, z) == dm(y, z); });
    };
    std::sort(outside.begin(), outside.end(), compare);

    for (std::size_t i = 0; i < outside.size();) {
        auto j = i + 1;
        while (j < outside.size() && same(outside[i], outside[j]))
            ++j;
        result.classes.emplace_back(outside.begin() + i, outside.begin() + j);
        i = j;
    }

    std::sort(result.classes.begin(), result.classes.end(),
        [](const VertexSet & a, const VertexSet & b) { return a.front() < b.front(); });

    result.min_class_size = n;
    for (auto & c : result.classes)
        result.min_class_size = std::min(result.min_class_size, c.size());
    return result;
}

auto k_of(const DistanceMatrix & dm, std::span<const Vertex> subject) -> std::size_t
{
    return partition_by_rs(dm, subject).min_class_size;
}

auto is_k_ars(const DistanceMatrix & dm, std::span<const Vertex> subject, std::size_t k, Semantics semantics) -> bool
{
    if (k < 1)
        throw Error(Errc::InvalidK, "k must be at least 1");
    auto actual = k_of(dm, subject);
    return semantics == Semantics::Exact ? actual == k : actual >= k;
}

auto to_string(Semantics semantics) -> const char *
{
    return semantics == Semantics::Exact ? "exact" : "atleast";
}

} // namespace antidim

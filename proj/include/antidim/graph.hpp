#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antidim {

/// Vertices are numbered 1..n everywhere in the public API.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Undirected simple graph with sorted adjacency lists. Immutable once built.
class Graph
{
public:
    Graph() = default;

    /// Builds the graph on vertices 1..n. Duplicate and reversed pairs
    /// collapse to one edge; self-loops and out-of-range endpoints throw.
    static auto from_edge_list(std::size_t n, std::span<const Edge> edges) -> Graph;

    auto order() const noexcept -> std::size_t { return _adjacency.size(); }
    auto size() const noexcept -> std::size_t { return _edge_count; }

    auto neighbours(Vertex u) const -> std::span<const Vertex>;
    auto degree(Vertex u) const -> std::size_t { return neighbours(u).size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Every edge once as (u, v) with u < v, in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<std::vector<Vertex>> _adjacency;
    std::size_t _edge_count = 0;
};

auto is_connected(const Graph & g) -> bool;
auto max_degree(const Graph & g) -> std::size_t;
auto min_degree(const Graph & g) -> std::size_t;

/// All-pairs hop distances, filled by one BFS per source.
class DistanceMatrix
{
public:
    using Distance = std::uint32_t;

    DistanceMatrix() = default;

    auto order() const noexcept -> std::size_t { return _n; }

    auto operator()(Vertex u, Vertex v) const -> Distance
    {
        return _d[(u - 1) * _n + (v - 1)];
    }

    /// Row of distances from u, indexed by v - 1.
    auto row(Vertex u) const -> std::span<const Distance>
    {
        return { _d.data() + (u - 1) * _n, _n };
    }

    auto diameter() const -> Distance;

private:
    friend auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    std::size_t _n = 0;
    std::vector<Distance> _d;
};

/// Throws Errc::Disconnected if some pair is unreachable.
auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

auto eccentricity(const DistanceMatrix & dm, Vertex v) -> DistanceMatrix::Distance;
auto eccentric_vertices(const DistanceMatrix & dm, Vertex v) -> VertexSet;

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Lines whose first non-blank character is '#' are comments; blank lines are
// skipped.

/// A parsed edge-list file. `comments` keeps the text of every comment line
/// (without the leading '#') so generator headers can be read back.
struct EdgeListFile
{
    Graph graph;
    std::vector<std::string> comments;
};

auto read_edge_list(std::istream & in) -> EdgeListFile;
auto read_edge_list_file(const std::string & path) -> EdgeListFile;

/// Writes `n m` and the edges in canonical order, preceded by one comment
/// line per entry of `header_comments`.
auto write_edge_list(std::ostream & out, const Graph & g, std::span<const std::string> header_comments = {})
    -> void;

} // namespace antidim

#include "antidim/graph.hpp"

#include "antidim/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace antidim {

namespace {
    constexpr auto unreached = std::numeric_limits<DistanceMatrix::Distance>::max();

    auto check_vertex(std::size_t n, Vertex v) -> void
    {
        if (v < 1 || v > n)
            throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n));
    }

    auto bfs(const Graph & g, Vertex source, std::span<DistanceMatrix::Distance> dist) -> std::size_t
    {
        std::fill(dist.begin(), dist.end(), unreached);
        std::vector<Vertex> queue;
        queue.reserve(g.order());
        queue.push_back(source);
        dist[source - 1] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto v : g.neighbours(u)) {
                if (dist[v - 1] == unreached) {
                    dist[v - 1] = dist[u - 1] + 1;
                    queue.push_back(v);
                }
            }
        }
        return queue.size();
    }
}

auto Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) -> Graph
{
    if (n < 1)
        throw Error(Errc::InvalidSize, "graph needs at least one vertex");

    Graph g;
    g._adjacency.resize(n);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v)
            throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g._adjacency[u - 1].push_back(v);
        g._adjacency[v - 1].push_back(u);
    }

    for (auto & list : g._adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g._edge_count += list.size();
    }
    g._edge_count /= 2;
    return g;
}

auto Graph::neighbours(Vertex u) const -> std::span<const Vertex>
{
    check_vertex(order(), u);
    return _adjacency[u - 1];
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    auto n = neighbours(u);
    return std::binary_search(n.begin(), n.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 1; u <= order(); ++u)
        for (auto v : _adjacency[u - 1])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    std::vector<DistanceMatrix::Distance> dist(g.order());
    return bfs(g, 1, dist) == g.order();
}

auto max_degree(const Graph & g) -> std::size_t
{
    std::size_t result = 0;
    for (Vertex u = 1; u <= g.order(); ++u)
        result = std::max(result, g.degree(u));
    return result;
}

auto min_degree(const Graph & g) -> std::size_t
{
    auto result = std::numeric_limits<std::size_t>::max();
    for (Vertex u = 1; u <= g.order(); ++u)
        result = std::min(result, g.degree(u));
    return result;
}

auto all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    DistanceMatrix dm;
    dm._n = g.order();
    dm._d.resize(dm._n * dm._n);
    for (Vertex u = 1; u <= dm._n; ++u) {
        std::span<DistanceMatrix::Distance> row(dm._d.data() + (u - 1) * dm._n, dm._n);
        if (bfs(g, u, row) != dm._n)
            throw Error(Errc::Disconnected, "vertex " + std::to_string(u) + " does not reach every vertex");
    }
    return dm;
}

auto DistanceMatrix::diameter() const -> Distance
{
    return _d.empty() ? 0 : *std::max_element(_d.begin(), _d.end());
}

auto eccentricity(const DistanceMatrix & dm, Vertex v) -> DistanceMatrix::Distance
{
    check_vertex(dm.order(), v);
    auto row = dm.row(v);
    return *std::max_element(row.begin(), row.end());
}

auto eccentric_vertices(const DistanceMatrix & dm, Vertex v) -> VertexSet
{
    auto e = eccentricity(dm, v);
    VertexSet result;
    for (Vertex u = 1; u <= dm.order(); ++u)
        if (dm(v, u) == e)
            result.push_back(u);
    return result;
}

auto read_edge_list(std::istream & in) -> EdgeListFile
{
    EdgeListFile file;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            auto text = line.find_first_not_of(" \t", first + 1);
            file.comments.push_back(text == std::string::npos ? std::string{} : line.substr(text));
            continue;
        }

        std::istringstream fields(line);
        long long a = 0, b = 0;
        std::string rest;
        if (! (fields >> a >> b) || (fields >> rest) || a < 0 || b < 0)
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two non-negative integers");

        if (! have_header) {
            n = static_cast<std::size_t>(a);
            m = static_cast<std::size_t>(b);
            have_header = true;
            edges.reserve(m);
        }
        else {
            if (a > std::numeric_limits<Vertex>::max() || b > std::numeric_limits<Vertex>::max())
                throw Error(Errc::IndexOutOfRange, "line " + std::to_string(line_no));
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    }

    if (! have_header)
        throw Error(Errc::ParseError, "missing 'n m' header line");
    if (edges.size() != m)
        throw Error(Errc::ParseError,
            "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    file.graph = Graph::from_edge_list(n, edges);
    return file;
}

auto read_edge_list_file(const std::string & path) -> EdgeListFile
{
    std::ifstream in(path);
    if (! in)
        throw std::ios_base::failure("cannot open " + path);
    return read_edge_list(in);
}

auto write_edge_list(std::ostream & out, const Graph & g, std::span<const std::string> header_comments) -> void
{
    for (auto & c : header_comments)
        out << "# " << c << '\n';
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

} // namespace antidim

#include "antidim/families.hpp"

#include "antidim/error.hpp"

#include <charconv>
#include <vector>

namespace antidim {

namespace {
    auto invalid(const std::string & what) -> Error { return Error(Errc::InvalidSize, what); }

    auto parse_size(std::string_view text, std::string_view whole) -> std::size_t
    {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
            throw Error(Errc::ParseError, "bad size in family '" + std::string(whole) + "'");
        return value;
    }
}

auto path_graph(std::size_t r) -> Graph
{
    if (r < 1)
        throw invalid("path needs r >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 1; u < r; ++u)
        edges.emplace_back(u, u + 1);
    return Graph::from_edge_list(r, edges);
}

auto cycle_graph(std::size_t s) -> Graph
{
    if (s < 3)
        throw invalid("cycle needs s >= 3");
    std::vector<Edge> edges;
    for (Vertex u = 1; u < s; ++u)
        edges.emplace_back(u, u + 1);
    edges.emplace_back(static_cast<Vertex>(s), 1);
    return Graph::from_edge_list(s, edges);
}

auto complete_graph(std::size_t r) -> Graph
{
    if (r < 1)
        throw invalid("complete graph needs r >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= r; ++u)
        for (Vertex v = u + 1; v <= r; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(r, edges);
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    auto ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(ng * h.size() + nh * g.size());
    for (std::size_t a = 1; a <= ng; ++a)
        for (auto [b, b2] : h.edges())
            edges.emplace_back(product_vertex(a, b, nh), product_vertex(a, b2, nh));
    for (auto [a, a2] : g.edges())
        for (std::size_t b = 1; b <= nh; ++b)
            edges.emplace_back(product_vertex(a, b, nh), product_vertex(a2, b, nh));
    return Graph::from_edge_list(ng * nh, edges);
}

auto validate(const FamilySpec & spec) -> void
{
    auto [kind, r, s] = spec;
    switch (kind) {
        case FamilyKind::Grid:
            if (r < 2 || s < 2)
                throw invalid("grid needs r,s >= 2");
            return;
        case FamilyKind::Cylinder:
            if (r < 2 || s < 3)
                throw invalid("cylinder needs r >= 2 and s >= 3");
            return;
        case FamilyKind::Torus:
            if (r < 3 || s < 3)
                throw invalid("torus needs r,s >= 3");
            return;
        case FamilyKind::Hamming2:
            if (r < 4)
                throw invalid("Hamming graph needs r >= 4");
            return;
    }
}

auto build_family(const FamilySpec & spec) -> Graph
{
    validate(spec);
    switch (spec.kind) {
        case FamilyKind::Grid: return cartesian_product(path_graph(spec.r), path_graph(spec.s));
        case FamilyKind::Cylinder: return cartesian_product(path_graph(spec.r), cycle_graph(spec.s));
        case FamilyKind::Torus: return cartesian_product(cycle_graph(spec.r), cycle_graph(spec.s));
        case FamilyKind::Hamming2: return cartesian_product(complete_graph(spec.r), complete_graph(spec.r));
    }
    throw invalid("unknown family");
}

auto parse_family(std::string_view text) -> FamilySpec
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::ParseError, "family '" + std::string(text) + "' lacks ':'");
    auto name = text.substr(0, colon);
    auto dims = text.substr(colon + 1);

    if (name == "ham")
        return FamilySpec::hamming2(parse_size(dims, text));

    auto x = dims.find('x');
    if (x == std::string_view::npos)
        throw Error(Errc::ParseError, "family '" + std::string(text) + "' needs RxS");
    auto r = parse_size(dims.substr(0, x), text);
    auto s = parse_size(dims.substr(x + 1), text);

    if (name == "grid")
        return FamilySpec::grid(r, s);
    if (name == "cyl")
        return FamilySpec::cylinder(r, s);
    if (name == "torus")
        return FamilySpec::torus(r, s);
    throw Error(Errc::ParseError, "unknown family '" + std::string(name) + "'");
}

auto to_string(const FamilySpec & spec) -> std::string
{
    auto dims = std::to_string(spec.r) + "x" + std::to_string(spec.s);
    switch (spec.kind) {
        case FamilyKind::Grid: return "grid:" + dims;
        case FamilyKind::Cylinder: return "cyl:" + dims;
        case FamilyKind::Torus: return "torus:" + dims;
        case FamilyKind::Hamming2: return "ham:" + std::to_string(spec.r);
    }
    return "?";
}

} // namespace antidim

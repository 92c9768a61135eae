#pragma once

#include "antidim/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace antidim {

auto path_graph(std::size_t r) -> Graph;
auto cycle_graph(std::size_t s) -> Graph;
auto complete_graph(std::size_t r) -> Graph;

/// G □ H. Vertex (a, b) of the product gets index (a - 1) * |V(H)| + b, so
/// rows follow the first factor and columns the second.
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

enum class FamilyKind { Grid, Cylinder, Torus, Hamming2 };

/// P_r □ P_s, P_r □ C_s, C_r □ C_s or K_r □ K_r. Hamming2 ignores `s`.
struct FamilySpec
{
    FamilyKind kind;
    std::size_t r;
    std::size_t s;

    static auto grid(std::size_t r, std::size_t s) -> FamilySpec { return { FamilyKind::Grid, r, s }; }
    static auto cylinder(std::size_t r, std::size_t s) -> FamilySpec { return { FamilyKind::Cylinder, r, s }; }
    static auto torus(std::size_t r, std::size_t s) -> FamilySpec { return { FamilyKind::Torus, r, s }; }
    static auto hamming2(std::size_t r) -> FamilySpec { return { FamilyKind::Hamming2, r, r }; }

    friend auto operator==(const FamilySpec &, const FamilySpec &) -> bool = default;
};

/// Throws Errc::InvalidSize outside Grid r,s >= 2; Cylinder r >= 2, s >= 3;
/// Torus r,s >= 3; Hamming2 r >= 4.
auto validate(const FamilySpec & spec) -> void;

auto build_family(const FamilySpec & spec) -> Graph;

/// Parses `grid:RxS`, `cyl:RxS`, `torus:RxS` or `ham:R`. Throws
/// Errc::ParseError on malformed text; sizes are validated separately.
auto parse_family(std::string_view text) -> FamilySpec;
auto to_string(const FamilySpec & spec) -> std::string;

/// Index of the product vertex in row `row` (1..r) and column `col` (1..s).
constexpr auto product_vertex(std::size_t row, std::size_t col, std::size_t s) -> Vertex
{
    return static_cast<Vertex>((row - 1) * s + col);
}

} // namespace antidim

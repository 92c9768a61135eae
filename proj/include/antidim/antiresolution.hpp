#pragma once

#include "antidim/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace antidim {

/// Exact: the smallest class has exactly k vertices (the k-ARS definition).
/// AtLeast: every class has at least k vertices (what the ILP's cardinality
/// constraints enforce).
enum class Semantics { Exact, AtLeast };

/// Classes of the relation "same distance to every vertex of S" on V \ S.
struct ArsPartition
{
    VertexSet subject;
    /// Each class is sorted, so its representative (smallest vertex) is first;
    /// classes are ordered by representative.
    std::vector<VertexSet> classes;
    std::size_t min_class_size = 0;
};

/// S may be given in any order and may repeat vertices. Throws
/// Errc::EmptySet for S = {}, Errc::FullSet for S = V and
/// Errc::IndexOutOfRange for vertices outside 1..n.
auto partition_by_rs(const DistanceMatrix & dm, std::span<const Vertex> subject) -> ArsPartition;

auto k_of(const DistanceMatrix & dm, std::span<const Vertex> subject) -> std::size_t;

/// Throws Errc::InvalidK when k < 1.
auto is_k_ars(const DistanceMatrix & dm, std::span<const Vertex> subject, std::size_t k, Semantics semantics) -> bool;

/// Sorted, deduplicated, range-checked copy of S; throws like partition_by_rs.
auto normalise_subject(std::size_t n, std::span<const Vertex> subject) -> VertexSet;

auto to_string(Semantics semantics) -> const char *;

} // namespace antidim

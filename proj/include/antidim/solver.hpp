#pragma once

#include "antidim/antiresolution.hpp"
#include "antidim/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace antidim {

enum class SolveStatus { Optimal, InfeasibleProven, UnknownUpToBound };

auto to_string(SolveStatus status) -> const char *;

struct SolveOutcome
{
    SolveStatus status = SolveStatus::UnknownUpToBound;
    /// |witness| when Optimal, 0 otherwise.
    std::size_t cardinality = 0;
    /// Lexicographically first qualifying set of minimum cardinality.
    VertexSet witness;
    /// Largest |S| for which every candidate set is accounted for.
    std::size_t explored_bound = 0;
    std::uint64_t nodes = 0;
};

struct SolveOptions
{
    Semantics semantics = Semantics::Exact;
    /// Maximum |S| to try; default_bound(n, k) when unset.
    std::optional<std::size_t> bound;
    /// Worker count, 0 for one per hardware thread. Results do not depend on it.
    unsigned threads = 1;
};

/// min(n - k, 6): callers must opt in to longer exhaustive runs.
auto default_bound(std::size_t n, std::size_t k) -> std::size_t;

/// Minimum-cardinality k-antiresolving set by exhaustive search over vertex
/// sets in increasing cardinality (lexicographic within a cardinality).
///
/// Any S whose classes all have >= k vertices leaves >= k vertices outside,
/// so |S| <= n - k; exhausting that range, or a search tree that dies out
/// before reaching the bound, proves infeasibility. Branches are cut only
/// where no superset can qualify: a class smaller than k can only disappear
/// by moving all its vertices into S, since adding vertices never merges
/// classes. k above the maximum degree is infeasible outright (the class of
/// a neighbour of any z in S lies inside N(z)).
///
/// Throws Errc::InvalidK for k < 1 and Errc::Disconnected.
auto solve_kmad(const Graph & g, std::size_t k, const SolveOptions & options = {}) -> SolveOutcome;
auto solve_kmad(const Graph & g, const DistanceMatrix & dm, std::size_t k, const SolveOptions & options = {})
    -> SolveOutcome;

/// One independent solve per k in 1..k_max.
auto sweep(const Graph & g, std::size_t k_max, const SolveOptions & options = {})
    -> std::vector<std::pair<std::size_t, SolveOutcome>>;

struct KappaOutcome
{
    /// Largest k found with a k-ARS (0 for the one-vertex graph).
    std::size_t value = 0;
    /// True when no larger k can admit an ARS within the whole search space.
    bool exact = false;
    VertexSet witness;
    std::size_t explored_bound = 0;
};

/// Largest k for which a k-ARS exists. Tries k = max_degree down to 1 with
/// the at-least-k search; the first feasible k is kappa because a set whose
/// classes all have >= k vertices is a k'-ARS for some k' >= k. Bound
/// defaults to min(n - 1, 6).
auto kappa(const Graph & g, std::optional<std::size_t> bound = std::nullopt, unsigned threads = 1) -> KappaOutcome;

} // namespace antidim

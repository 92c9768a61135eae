#pragma once

#include "antidim/families.hpp"
#include "antidim/graph.hpp"
#include "antidim/solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace antidim::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_unknown = 3;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_io = 66;

/// A graph named on the command line: family syntax (grid:RxS, cyl:RxS,
/// torus:RxS, ham:R, path:N, cycle:N, complete:N), `file:PATH`, or a plain
/// path to an edge-list file.
struct GraphSource
{
    std::string descriptor;
    Graph graph;
    std::optional<FamilySpec> family;
    /// delta from a "# gen ..." header, when the file carries one.
    std::optional<std::size_t> gen_delta;
};

auto load_graph_source(const std::string & text) -> GraphSource;

/// Parses "1,5,9" (whitespace around entries allowed). Throws
/// Errc::ParseError on anything else.
auto parse_vertex_list(const std::string & text) -> VertexSet;

struct RunRecord
{
    std::string graph;
    std::size_t n = 0;
    std::size_t k = 0;
    Semantics semantics = Semantics::Exact;
    SolveOutcome outcome;
    double seconds = 0.0;
};

inline constexpr const char * csv_header = "graph,n,k,semantics,status,adim,witness,seconds";

auto csv_row(const RunRecord & record) -> std::string;
auto json_row(const RunRecord & record) -> std::string;

/// Runs one command line (args[0] is the program name) and returns the exit
/// status. Normal output goes to `out`, diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace antidim::cli

#pragma once

#include "antidim/antiresolution.hpp"
#include "antidim/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace antidim {

// Binary integer programs whose feasible points (s, q) encode a vertex set S
// (s_u = 1 iff u in S) and its classes (q_uv = 1 iff v belongs to the class
// whose smallest vertex is u, for u <= v).

/// F carries one incompatibility row s_u + q_vw <= 1 per separating triple;
/// FA aggregates them into one big-M row per pair.
enum class Formulation { F, FA };

/// Model selector used by the CLI and by enumerate_feasible_sets. FX and FAX
/// add the exactness rows (some class has exactly k vertices).
enum class Variant { F, FA, FX, FAX };

auto to_string(Variant variant) -> const char *;
auto parse_variant(const std::string & text) -> Variant;

enum class Relation { GreaterEqual, LessEqual, Equal };

struct Term
{
    std::size_t var;
    std::int64_t coeff;
};

struct Constraint
{
    std::string name;
    std::vector<Term> terms;
    Relation relation;
    std::int64_t rhs;
};

class IlpModel
{
public:
    IlpModel(std::size_t n, std::size_t k, Formulation formulation);

    auto n() const -> std::size_t { return _n; }
    auto k() const -> std::size_t { return _k; }
    auto formulation() const -> Formulation { return _formulation; }
    auto has_exactness() const -> bool { return _exactness; }
    auto variant() const -> Variant;

    // Variable layout: s_1..s_n, then q_u_v for u <= v in lexicographic
    // order, then e_1..e_n when the exactness rows are present.
    auto s_var(Vertex u) const -> std::size_t { return u - 1; }
    auto q_var(Vertex u, Vertex v) const -> std::size_t;
    auto e_var(Vertex u) const -> std::size_t { return _n + q_count() + u - 1; }
    auto q_count() const -> std::size_t { return _n * (_n + 1) / 2; }
    auto variable_count() const -> std::size_t { return _n + q_count() + (_exactness ? _n : 0); }
    auto variable_name(std::size_t var) const -> std::string;

    auto objective() const -> const std::vector<Term> & { return _objective; }
    auto constraints() const -> const std::vector<Constraint> & { return _constraints; }

    /// Terms are reordered canonically: s block by index, then off-diagonal
    /// q, then diagonal q, then e.
    auto add_constraint(std::string name, std::vector<Term> terms, Relation relation, std::int64_t rhs) -> void;

private:
    friend auto build_exactness_extension(const IlpModel & model) -> IlpModel;

    auto order_key(std::size_t var) const -> std::pair<int, std::size_t>;

    std::size_t _n, _k;
    Formulation _formulation;
    bool _exactness = false;
    std::vector<Term> _objective;
    std::vector<Constraint> _constraints;
    std::vector<std::string> _names;
    std::vector<bool> _diagonal;
};

/// Rows: nonempty (at least one vertex in S); part_u (u is in S or in
/// exactly one class); card_u (a class headed by u has >= k members);
/// inc_u_v_w for u != v, v < w, d_uv != d_uw; max_u_v for u < v (v outside
/// S and outside u's class must be separated from u by S).
auto build_F(const DistanceMatrix & dm, std::size_t k) -> IlpModel;

/// As build_F with the inc rows replaced by agg_v_w for v < w:
/// sum of s_u over u with d_uv != d_uw, plus n q_vw, at most n.
auto build_FA(const DistanceMatrix & dm, std::size_t k) -> IlpModel;

/// Adds binaries e_u with exrep_u (e_u <= q_uu), exsize_u (a class headed
/// by u with e_u = 1 has at most k members) and exany (some e_u = 1).
auto build_exactness_extension(const IlpModel & model) -> IlpModel;

auto build_model(const DistanceMatrix & dm, std::size_t k, Variant variant) -> IlpModel;

/// 0/1 values for every variable of a model of order n.
struct Assignment
{
    std::vector<std::uint8_t> s;
    /// Row-major upper triangle including the diagonal, as in IlpModel.
    std::vector<std::uint8_t> q;
    /// Empty unless the model carries exactness rows.
    std::vector<std::uint8_t> e;

    static auto zero(std::size_t n, bool with_e = false) -> Assignment;

    auto n() const -> std::size_t { return s.size(); }
    auto q_at(Vertex u, Vertex v) const -> bool;
    auto set_q(Vertex u, Vertex v, bool value = true) -> void;

    friend auto operator==(const Assignment &, const Assignment &) -> bool = default;
};

/// s marks S; each class is encoded as q_{rep,v} = 1 for all members v,
/// with rep its smallest vertex. When `with_e`, e_rep = 1 for every class
/// of exactly `exact_k` vertices.
auto encode_ars(const ArsPartition & partition, bool with_e = false, std::size_t exact_k = 0) -> Assignment;

struct DecodedSolution
{
    VertexSet subject;
    /// One entry per u with q_uu = 1: {v >= u : q_uv = 1}.
    std::vector<VertexSet> q_subsets;

    friend auto operator==(const DecodedSolution &, const DecodedSolution &) -> bool = default;
};

auto decode(const Assignment & a) -> DecodedSolution;

struct ValidationReport
{
    std::vector<std::string> violated;

    auto feasible() const -> bool { return violated.empty(); }
};

/// Throws Errc::DimensionMismatch when the assignment does not fit the model.
auto validate(const IlpModel & model, const Assignment & a) -> ValidationReport;
auto is_feasible(const IlpModel & model, const Assignment & a) -> bool;

/// Every non-empty proper S whose canonical class encoding satisfies the
/// model, ordered by cardinality then lexicographically. Throws
/// Errc::TooLarge above 14 vertices.
auto enumerate_feasible_sets(const DistanceMatrix & dm, std::size_t k, Variant variant, unsigned threads = 1)
    -> std::vector<VertexSet>;

/// CPLEX-LP text; byte-stable for a given model.
auto emit_lp(const IlpModel & model) -> std::string;
auto write_lp(std::ostream & out, const IlpModel & model) -> void;

} // namespace antidim

#include "antidim/ilp.hpp"

#include "antidim/error.hpp"
#include "antidim/parallel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace antidim {

namespace {
    auto check_k(std::size_t k) -> void
    {
        if (k < 1)
            throw Error(Errc::InvalidK, "k must be at least 1");
    }

    auto as_coeff(std::size_t x) -> std::int64_t { return static_cast<std::int64_t>(x); }

    // Rows shared by F and FA: nonempty, part, card. The separating rows and
    // max rows are added by the callers so families appear in order.
    auto base_model(const DistanceMatrix & dm, std::size_t k, Formulation formulation) -> IlpModel
    {
        check_k(k);
        auto n = dm.order();
        IlpModel model(n, k, formulation);

        std::vector<Term> terms;
        for (Vertex u = 1; u <= n; ++u)
            terms.push_back({ model.s_var(u), 1 });
        model.add_constraint("nonempty", terms, Relation::GreaterEqual, 1);

        for (Vertex u = 1; u <= n; ++u) {
            terms = { { model.s_var(u), 1 } };
            for (Vertex v = 1; v <= u; ++v)
                terms.push_back({ model.q_var(v, u), 1 });
            model.add_constraint("part_" + std::to_string(u), terms, Relation::Equal, 1);
        }

        for (Vertex u = 1; u <= n; ++u) {
            terms.clear();
            for (Vertex v = u + 1; v <= n; ++v)
                terms.push_back({ model.q_var(u, v), 1 });
            if (k > 1 || terms.empty())
                terms.push_back({ model.q_var(u, u), -as_coeff(k - 1) });
            model.add_constraint("card_" + std::to_string(u), terms, Relation::GreaterEqual, 0);
        }
        return model;
    }

    auto add_max_rows(IlpModel & model, const DistanceMatrix & dm) -> void
    {
        auto n = dm.order();
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                std::vector<Term> terms{ { model.s_var(v), 1 }, { model.q_var(u, v), 1 } };
                for (Vertex w = 1; w <= n; ++w)
                    if (w != u && w != v && dm(u, w) != dm(v, w))
                        terms.push_back({ model.s_var(w), 1 });
                terms.push_back({ model.q_var(u, u), -1 });
                model.add_constraint(
                    "max_" + std::to_string(u) + "_" + std::to_string(v), terms, Relation::GreaterEqual, 0);
            }
        }
    }

    auto write_term(std::ostream & out, const IlpModel & model, const Term & t, bool first) -> void
    {
        auto magnitude = t.coeff < 0 ? -t.coeff : t.coeff;
        if (t.coeff < 0)
            out << (first ? "- " : " - ");
        else if (! first)
            out << " + ";
        if (magnitude != 1)
            out << magnitude << ' ';
        out << model.variable_name(t.var);
    }

    auto relation_text(Relation r) -> const char *
    {
        switch (r) {
            case Relation::GreaterEqual: return ">=";
            case Relation::LessEqual: return "<=";
            case Relation::Equal: return "=";
        }
        return "?";
    }

    auto variables_of(const IlpModel & model, const Assignment & a) -> std::vector<std::uint8_t>
    {
        auto n = model.n();
        if (a.s.size() != n || a.q.size() != model.q_count()
            || a.e.size() != (model.has_exactness() ? n : std::size_t{ 0 }))
            throw Error(Errc::DimensionMismatch, "assignment does not match a model of order " + std::to_string(n));
        std::vector<std::uint8_t> values;
        values.reserve(model.variable_count());
        values.insert(values.end(), a.s.begin(), a.s.end());
        values.insert(values.end(), a.q.begin(), a.q.end());
        values.insert(values.end(), a.e.begin(), a.e.end());
        return values;
    }

    auto satisfied(const Constraint & c, const std::vector<std::uint8_t> & values) -> bool
    {
        std::int64_t lhs = 0;
        for (auto & t : c.terms)
            lhs += t.coeff * values[t.var];
        switch (c.relation) {
            case Relation::GreaterEqual: return lhs >= c.rhs;
            case Relation::LessEqual: return lhs <= c.rhs;
            case Relation::Equal: return lhs == c.rhs;
        }
        return false;
    }

    auto q_index(std::size_t n, Vertex u, Vertex v) -> std::size_t
    {
        std::size_t before = (u - 1) * n - (u - 1) * (u - 2) / 2;
        return before + (v - u);
    }
}

auto to_string(Variant variant) -> const char *
{
    switch (variant) {
        case Variant::F: return "F";
        case Variant::FA: return "FA";
        case Variant::FX: return "FX";
        case Variant::FAX: return "FAX";
    }
    return "?";
}

auto parse_variant(const std::string & text) -> Variant
{
    if (text == "F")
        return Variant::F;
    if (text == "FA")
        return Variant::FA;
    if (text == "FX")
        return Variant::FX;
    if (text == "FAX")
        return Variant::FAX;
    throw Error(Errc::ParseError, "unknown model variant '" + text + "'");
}

IlpModel::IlpModel(std::size_t n, std::size_t k, Formulation formulation) :
    _n(n),
    _k(k),
    _formulation(formulation)
{
    for (Vertex u = 1; u <= n; ++u)
        _objective.push_back({ s_var(u), 1 });

    _names.reserve(n + q_count());
    _diagonal.assign(q_count(), false);
    for (Vertex u = 1; u <= n; ++u)
        _names.push_back("s_" + std::to_string(u));
    for (Vertex u = 1; u <= n; ++u) {
        _diagonal[q_index(n, u, u)] = true;
        for (Vertex v = u; v <= n; ++v)
            _names.push_back("q_" + std::to_string(u) + "_" + std::to_string(v));
    }
}

auto IlpModel::variant() const -> Variant
{
    if (_formulation == Formulation::F)
        return _exactness ? Variant::FX : Variant::F;
    return _exactness ? Variant::FAX : Variant::FA;
}

auto IlpModel::q_var(Vertex u, Vertex v) const -> std::size_t
{
    return _n + q_index(_n, u, v);
}

auto IlpModel::variable_name(std::size_t var) const -> std::string
{
    return _names.at(var);
}

auto IlpModel::order_key(std::size_t var) const -> std::pair<int, std::size_t>
{
    if (var < _n)
        return { 0, var };
    if (var >= _n + q_count())
        return { 3, var };
    return { _diagonal[var - _n] ? 2 : 1, var };
}

auto IlpModel::add_constraint(std::string name, std::vector<Term> terms, Relation relation, std::int64_t rhs) -> void
{
    std::stable_sort(terms.begin(), terms.end(),
        [&](const Term & a, const Term & b) { return order_key(a.var) < order_key(b.var); });
    _constraints.push_back({ std::move(name), std::move(terms), relation, rhs });
}

auto build_F(const DistanceMatrix & dm, std::size_t k) -> IlpModel
{
    auto model = base_model(dm, k, Formulation::F);
    auto n = dm.order();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            for (Vertex w = v + 1; w <= n; ++w)
                if (u != v && dm(u, v) != dm(u, w))
                    model.add_constraint(
                        "inc_" + std::to_string(u) + "_" + std::to_string(v) + "_" + std::to_string(w),
                        { { model.s_var(u), 1 }, { model.q_var(v, w), 1 } }, Relation::LessEqual, 1);
    add_max_rows(model, dm);
    return model;
}

auto build_FA(const DistanceMatrix & dm, std::size_t k) -> IlpModel
{
    auto model = base_model(dm, k, Formulation::FA);
    auto n = dm.order();
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w = v + 1; w <= n; ++w) {
            std::vector<Term> terms;
            for (Vertex u = 1; u <= n; ++u)
                if (dm(u, v) != dm(u, w))
                    terms.push_back({ model.s_var(u), 1 });
            terms.push_back({ model.q_var(v, w), as_coeff(n) });
            model.add_constraint("agg_" + std::to_string(v) + "_" + std::to_string(w), terms, Relation::LessEqual,
                as_coeff(n));
        }
    }
    add_max_rows(model, dm);
    return model;
}

auto build_exactness_extension(const IlpModel & model) -> IlpModel
{
    if (model.has_exactness())
        return model;
    IlpModel extended = model;
    extended._exactness = true;
    auto n = model.n();
    auto k = model.k();
    for (Vertex u = 1; u <= n; ++u)
        extended._names.push_back("e_" + std::to_string(u));
    for (Vertex u = 1; u <= n; ++u)
        extended.add_constraint("exrep_" + std::to_string(u),
            { { extended.e_var(u), 1 }, { extended.q_var(u, u), -1 } }, Relation::LessEqual, 0);
    // sum_{v>u} q_uv <= (k - 1) + (n - k)(1 - e_u)
    for (Vertex u = 1; u <= n; ++u) {
        std::vector<Term> terms;
        for (Vertex v = u + 1; v <= n; ++v)
            terms.push_back({ extended.q_var(u, v), 1 });
        terms.push_back({ extended.e_var(u), as_coeff(n) - as_coeff(k) });
        extended.add_constraint("exsize_" + std::to_string(u), terms, Relation::LessEqual, as_coeff(n) - 1);
    }
    std::vector<Term> any;
    for (Vertex u = 1; u <= n; ++u)
        any.push_back({ extended.e_var(u), 1 });
    extended.add_constraint("exany", any, Relation::GreaterEqual, 1);
    return extended;
}

auto build_model(const DistanceMatrix & dm, std::size_t k, Variant variant) -> IlpModel
{
    switch (variant) {
        case Variant::F: return build_F(dm, k);
        case Variant::FA: return build_FA(dm, k);
        case Variant::FX: return build_exactness_extension(build_F(dm, k));
        case Variant::FAX: return build_exactness_extension(build_FA(dm, k));
    }
    throw Error(Errc::InvalidSpec, "unknown variant");
}

auto Assignment::zero(std::size_t n, bool with_e) -> Assignment
{
    Assignment a;
    a.s.assign(n, 0);
    a.q.assign(n * (n + 1) / 2, 0);
    if (with_e)
        a.e.assign(n, 0);
    return a;
}

auto Assignment::q_at(Vertex u, Vertex v) const -> bool
{
    return q[q_index(n(), u, v)] != 0;
}

auto Assignment::set_q(Vertex u, Vertex v, bool value) -> void
{
    q[q_index(n(), u, v)] = value ? 1 : 0;
}

auto encode_ars(const ArsPartition & partition, bool with_e, std::size_t exact_k) -> Assignment
{
    std::size_t n = partition.subject.size();
    for (auto & c : partition.classes)
        n += c.size();

    auto a = Assignment::zero(n, with_e);
    for (auto u : partition.subject)
        a.s[u - 1] = 1;
    for (auto & c : partition.classes) {
        auto rep = c.front();
        for (auto v : c)
            a.set_q(rep, v);
        if (with_e && c.size() == exact_k)
            a.e[rep - 1] = 1;
    }
    return a;
}

auto decode(const Assignment & a) -> DecodedSolution
{
    DecodedSolution result;
    auto n = a.n();
    for (Vertex u = 1; u <= n; ++u)
        if (a.s[u - 1])
            result.subject.push_back(u);
    for (Vertex u = 1; u <= n; ++u) {
        if (! a.q_at(u, u))
            continue;
        VertexSet members;
        for (Vertex v = u; v <= n; ++v)
            if (a.q_at(u, v))
                members.push_back(v);
        result.q_subsets.push_back(std::move(members));
    }
    return result;
}

auto validate(const IlpModel & model, const Assignment & a) -> ValidationReport
{
    auto values = variables_of(model, a);
    ValidationReport report;
    for (auto & c : model.constraints())
        if (! satisfied(c, values))
            report.violated.push_back(c.name);
    return report;
}

auto is_feasible(const IlpModel & model, const Assignment & a) -> bool
{
    auto values = variables_of(model, a);
    return std::all_of(
        model.constraints().begin(), model.constraints().end(), [&](auto & c) { return satisfied(c, values); });
}

auto enumerate_feasible_sets(const DistanceMatrix & dm, std::size_t k, Variant variant, unsigned threads)
    -> std::vector<VertexSet>
{
    auto n = dm.order();
    if (n > 14)
        throw Error(Errc::TooLarge, "enumeration is limited to 14 vertices, got " + std::to_string(n));
    auto model = build_model(dm, k, variant);
    bool with_e = model.has_exactness();

    std::uint32_t full = (1u << n) - 1;
    constexpr std::uint32_t chunk = 256;
    std::size_t chunks = full / chunk + 1;
    std::vector<std::vector<VertexSet>> found(chunks);

    parallel_for(chunks, threads, [&](std::size_t c, unsigned) {
        auto begin = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(c) * chunk);
        auto end = std::min<std::uint32_t>(full, static_cast<std::uint32_t>(c + 1) * chunk);
        for (auto mask = begin; mask < end; ++mask) {
            VertexSet s;
            for (Vertex u = 1; u <= n; ++u)
                if (mask >> (u - 1) & 1u)
                    s.push_back(u);
            auto partition = partition_by_rs(dm, s);
            if (is_feasible(model, encode_ars(partition, with_e, k)))
                found[c].push_back(std::move(s));
        }
    });

    std::vector<VertexSet> result;
    for (auto & part : found)
        for (auto & s : part)
            result.push_back(std::move(s));
    std::sort(result.begin(), result.end(), [](const VertexSet & a, const VertexSet & b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
}

auto write_lp(std::ostream & out, const IlpModel & model) -> void
{
    auto formulation = model.formulation() == Formulation::F ? "F" : "FA";
    out << "\\ antidim " << (model.has_exactness() ? to_string(model.variant()) : formulation) << " k=" << model.k()
        << " n=" << model.n() << '\n';
    out << "Minimize\n obj:";
    bool first = true;
    for (auto & t : model.objective()) {
        out << (first ? " " : "");
        write_term(out, model, t, first);
        first = false;
    }
    out << "\nSubject To\n";
    for (auto & c : model.constraints()) {
        out << ' ' << c.name << ": ";
        first = true;
        for (auto & t : c.terms) {
            write_term(out, model, t, first);
            first = false;
        }
        out << ' ' << relation_text(c.relation) << ' ' << c.rhs << '\n';
    }
    out << "Binaries\n";
    for (std::size_t var = 0; var < model.variable_count(); ++var)
        out << ' ' << model.variable_name(var) << '\n';
    out << "End\n";
}

auto emit_lp(const IlpModel & model) -> std::string
{
    std::ostringstream out;
    write_lp(out, model);
    return out.str();
}

} // namespace antidim

#include "antidim/cli.hpp"

#include "antidim/antiresolution.hpp"
#include "antidim/closed_form.hpp"
#include "antidim/error.hpp"
#include "antidim/ilp.hpp"
#include "antidim/instance_gen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace antidim::cli {

namespace {
    auto parse_count(std::string_view text) -> std::optional<std::size_t>
    {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
            return std::nullopt;
        return value;
    }

    auto trim(std::string_view text) -> std::string_view
    {
        auto first = text.find_first_not_of(" \t");
        if (first == std::string_view::npos)
            return {};
        auto last = text.find_last_not_of(" \t");
        return text.substr(first, last - first + 1);
    }

    auto read_gen_delta(const std::vector<std::string> & comments) -> std::optional<std::size_t>
    {
        for (auto & c : comments) {
            if (c.rfind("gen ", 0) != 0)
                continue;
            std::istringstream fields(c);
            std::string field;
            while (fields >> field)
                if (field.rfind("delta=", 0) == 0)
                    return parse_count(std::string_view(field).substr(6));
        }
        return std::nullopt;
    }

    auto witness_text(const VertexSet & set) -> std::string
    {
        std::string text;
        for (auto v : set) {
            if (! text.empty())
                text += ';';
            text += std::to_string(v);
        }
        return text;
    }

    auto adim_text(const SolveOutcome & o) -> std::string
    {
        switch (o.status) {
            case SolveStatus::Optimal: return std::to_string(o.cardinality);
            case SolveStatus::InfeasibleProven: return "inf";
            case SolveStatus::UnknownUpToBound: return "unknown";
        }
        return "?";
    }

    auto exit_for(SolveStatus status) -> int
    {
        switch (status) {
            case SolveStatus::Optimal: return exit_ok;
            case SolveStatus::InfeasibleProven: return exit_infeasible;
            case SolveStatus::UnknownUpToBound: return exit_unknown;
        }
        return exit_unknown;
    }

    auto default_threads() -> unsigned
    {
        if (auto env = std::getenv("ANTIDIM_THREADS"))
            if (auto value = parse_count(env))
                return static_cast<unsigned>(*value);
        return 0;
    }

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct OutputFlags
    {
        bool json = false;
        bool csv = false;
    };

    class Emitter
    {
    public:
        Emitter(std::ostream & out, OutputFlags flags) : _out(out), _json(flags.json) {}

        auto emit(const RunRecord & record) -> void
        {
            if (_json) {
                _out << json_row(record) << '\n';
                return;
            }
            if (! _header_written) {
                _out << csv_header << '\n';
                _header_written = true;
            }
            _out << csv_row(record) << '\n';
        }

    private:
        std::ostream & _out;
        bool _json;
        bool _header_written = false;
    };

    auto solve_record(const GraphSource & source, const DistanceMatrix & dm, std::size_t k,
        const SolveOptions & options) -> RunRecord
    {
        auto start = std::chrono::steady_clock::now();
        RunRecord record;
        record.graph = source.descriptor;
        record.n = source.graph.order();
        record.k = k;
        record.semantics = options.semantics;
        record.outcome = solve_kmad(source.graph, dm, k, options);
        record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return record;
    }

    auto open_output(const std::string & path, std::ofstream & file) -> std::ostream &
    {
        file.open(path, std::ios::binary);
        if (! file)
            throw std::ios_base::failure("cannot write " + path);
        return file;
    }

    auto parse_semantics(const std::string & text) -> Semantics
    {
        if (text == "exact")
            return Semantics::Exact;
        if (text == "atleast")
            return Semantics::AtLeast;
        throw UsageError("--semantics must be exact or atleast");
    }
}

auto load_graph_source(const std::string & text) -> GraphSource
{
    GraphSource source;
    source.descriptor = text;

    auto colon = text.find(':');
    if (colon != std::string::npos) {
        auto name = text.substr(0, colon);
        auto rest = std::string_view(text).substr(colon + 1);
        if (name == "grid" || name == "cyl" || name == "torus" || name == "ham") {
            source.family = parse_family(text);
            source.graph = build_family(*source.family);
            return source;
        }
        if (name == "path" || name == "cycle" || name == "complete") {
            if (auto size = parse_count(rest)) {
                source.graph = name == "path" ? path_graph(*size)
                    : name == "cycle"         ? cycle_graph(*size)
                                              : complete_graph(*size);
                return source;
            }
        }
    }

    // "file:X" and a non-numeric "path:X" both name an edge-list file X.
    auto path = text;
    if (text.rfind("file:", 0) == 0 || text.rfind("path:", 0) == 0)
        path = text.substr(5);
    auto file = read_edge_list_file(path);
    source.graph = std::move(file.graph);
    source.gen_delta = read_gen_delta(file.comments);
    return source;
}

auto parse_vertex_list(const std::string & text) -> VertexSet
{
    VertexSet result;
    std::string_view rest = text;
    if (trim(rest).empty())
        throw Error(Errc::ParseError, "empty vertex list");
    for (;;) {
        auto comma = rest.find(',');
        auto item = trim(rest.substr(0, comma));
        auto value = parse_count(item);
        if (! value || *value == 0 || *value > std::numeric_limits<Vertex>::max())
            throw Error(Errc::ParseError, "bad vertex '" + std::string(item) + "' in list '" + text + "'");
        result.push_back(static_cast<Vertex>(*value));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return result;
}

auto csv_row(const RunRecord & r) -> std::string
{
    std::ostringstream row;
    row << r.graph << ',' << r.n << ',' << r.k << ',' << to_string(r.semantics) << ',' << to_string(r.outcome.status)
        << ',' << adim_text(r.outcome) << ',' << witness_text(r.outcome.witness) << ',' << std::fixed
        << std::setprecision(6) << r.seconds;
    return row.str();
}

auto json_row(const RunRecord & r) -> std::string
{
    nlohmann::ordered_json row;
    row["graph"] = r.graph;
    row["n"] = r.n;
    row["k"] = r.k;
    row["semantics"] = to_string(r.semantics);
    row["status"] = to_string(r.outcome.status);
    if (r.outcome.status == SolveStatus::Optimal)
        row["adim"] = r.outcome.cardinality;
    else
        row["adim"] = adim_text(r.outcome);
    row["witness"] = witness_text(r.outcome.witness);
    row["seconds"] = r.seconds;
    return row.dump();
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Exact k-metric antidimension and (k,l)-anonymity toolkit", "antidim" };
    app.require_subcommand(1);

    std::string source_text;
    std::size_t k = 0;
    std::string semantics_text = "exact";
    std::optional<std::size_t> bound;
    OutputFlags flags;
    unsigned threads = default_threads();

    auto add_output_flags = [&](CLI::App * cmd) {
        auto json = cmd->add_flag("--json", flags.json, "one JSON object per line");
        auto csv = cmd->add_flag("--csv", flags.csv, "CSV with header (default)");
        json->excludes(csv);
    };
    auto add_solver_flags = [&](CLI::App * cmd) {
        cmd->add_option("--semantics", semantics_text, "exact or atleast")->capture_default_str();
        cmd->add_option("--bound", bound, "largest |S| to try (default: exhaustive, n-k)");
        cmd->add_option("--threads", threads, "worker threads, 0 = all cores (env ANTIDIM_THREADS)");
        add_output_flags(cmd);
    };

    auto solve = app.add_subcommand("solve", "minimum k-antiresolving set");
    solve->add_option("source", source_text, "graph file or family")->required();
    solve->add_option("-k", k, "privacy parameter k")->required();
    add_solver_flags(solve);

    std::optional<std::size_t> k_max;
    auto sweep_cmd = app.add_subcommand("sweep", "solve for k = 1..kmax");
    sweep_cmd->add_option("source", source_text, "graph file or family")->required();
    sweep_cmd->add_option("--kmax", k_max, "largest k (default min(delta, floor(n/2)))");
    add_solver_flags(sweep_cmd);

    std::string variant_text = "FA";
    std::string out_path;
    auto lp = app.add_subcommand("lp", "write the integer program as LP text");
    lp->add_option("source", source_text, "graph file or family")->required();
    lp->add_option("-k", k, "privacy parameter k")->required();
    lp->add_option("--variant", variant_text, "F, FA, FX (F + exactness) or FAX")->capture_default_str();
    lp->add_option("--out", out_path, "output file (default stdout)");

    std::optional<std::size_t> ell;
    bool want_kappa = false;
    auto closed = app.add_subcommand("closed", "closed-form values for product families");
    closed->add_option("family", source_text, "grid:RxS, cyl:RxS, torus:RxS or ham:R")->required();
    auto closed_k = closed->add_option("-k", k, "privacy parameter k");
    auto closed_ell = closed->add_option("--anonymity", ell, "attacker budget l");
    auto closed_kappa = closed->add_flag("--kappa", want_kappa, "largest k admitting a k-ARS");
    closed_k->excludes(closed_ell)->excludes(closed_kappa);
    closed_ell->excludes(closed_kappa);

    std::string class_text;
    std::size_t gen_n = 0, gen_delta = 0;
    std::uint64_t seed = 1;
    auto gen = app.add_subcommand("gen", "generate a random T, S or D instance");
    gen->add_option("class", class_text, "T, S or D")->required();
    gen->add_option("n", gen_n, "vertex count")->required();
    gen->add_option("delta", gen_delta, "degree parameter")->required();
    gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    gen->add_option("--out", out_path, "output file (default stdout)");

    std::string set_text;
    auto verify = app.add_subcommand("verify", "check whether a vertex set is a k-ARS");
    verify->add_option("source", source_text, "graph file or family")->required();
    verify->add_option("-k", k, "privacy parameter k")->required();
    verify->add_option("--set", set_text, "comma-separated vertices, e.g. \"1,5,9\"")->required();

    auto kappa_cmd = app.add_subcommand("kappa", "largest k admitting a k-ARS, by search");
    kappa_cmd->add_option("source", source_text, "graph file or family")->required();
    kappa_cmd->add_option("--bound", bound, "largest |S| to try (default: exhaustive, n-1)");
    kappa_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

    std::vector<const char *> argv;
    for (auto & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    // Parse errors while reading an input file are data errors; everywhere
    // else they come from malformed arguments.
    int parse_error_exit = exit_usage;
    auto load = [&](const std::string & text) {
        auto name = text.substr(0, text.find(':'));
        bool family = name == "grid" || name == "cyl" || name == "torus" || name == "ham";
        parse_error_exit = family ? exit_usage : exit_data;
        auto source = load_graph_source(text);
        parse_error_exit = exit_usage;
        return source;
    };

    try {
        if (solve->parsed()) {
            auto source = load(source_text);
            auto dm = all_pairs_distances(source.graph);
            // Unlike the library, the CLI searches exhaustively unless capped:
            // the pruned search is cheap at the sizes it is used on, and an
            // "unknown" answer is rarely what a caller wants.
            SolveOptions options{ parse_semantics(semantics_text), bound.value_or(source.graph.order()), threads };
            auto record = solve_record(source, dm, k, options);
            Emitter(out, flags).emit(record);
            return exit_for(record.outcome.status);
        }

        if (sweep_cmd->parsed()) {
            auto source = load(source_text);
            auto dm = all_pairs_distances(source.graph);
            SolveOptions options{ parse_semantics(semantics_text), bound.value_or(source.graph.order()), threads };
            auto n = source.graph.order();
            auto delta = source.gen_delta.value_or(max_degree(source.graph));
            auto last = k_max.value_or(std::max<std::size_t>(1, std::min(delta, n / 2)));
            if (last < 1)
                throw UsageError("--kmax must be at least 1");
            Emitter emitter(out, flags);
            for (std::size_t kk = 1; kk <= last; ++kk)
                emitter.emit(solve_record(source, dm, kk, options));
            return exit_ok;
        }

        if (lp->parsed()) {
            auto source = load(source_text);
            auto dm = all_pairs_distances(source.graph);
            auto model = build_model(dm, k, parse_variant(variant_text));
            std::ostringstream counts;
            counts << "vars=" << model.variable_count() << " constraints=" << model.constraints().size();
            if (out_path.empty()) {
                write_lp(out, model);
                err << counts.str() << '\n';
            }
            else {
                std::ofstream file;
                write_lp(open_output(out_path, file), model);
                out << counts.str() << '\n';
            }
            return exit_ok;
        }

        if (closed->parsed()) {
            auto spec = parse_family(source_text);
            validate(spec);
            if (want_kappa) {
                out << "kappa=" << kappa_closed(spec) << '\n';
            }
            else if (ell) {
                if (*ell < 1)
                    throw UsageError("--anonymity must be at least 1");
                auto result = family_anonymity(spec, *ell);
                out << "k=" << (result.k ? std::to_string(*result.k) : std::string("none")) << " ell=" << result.ell
                    << '\n';
            }
            else if (*closed_k) {
                out << to_string(family_adim(spec, k)) << '\n';
            }
            else {
                throw UsageError("closed needs one of -k, --anonymity or --kappa");
            }
            return exit_ok;
        }

        if (gen->parsed()) {
            GenSpec spec{ parse_instance_class(class_text), gen_n, gen_delta, seed };
            auto g = generate(spec);
            std::vector<std::string> header{ gen_header(spec) };
            if (out_path.empty()) {
                write_edge_list(out, g, header);
            }
            else {
                std::ofstream file;
                write_edge_list(open_output(out_path, file), g, header);
                out << "wrote " << out_path << " n=" << g.order() << " m=" << g.size() << '\n';
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            auto source = load(source_text);
            auto dm = all_pairs_distances(source.graph);
            auto set = parse_vertex_list(set_text);
            if (k < 1)
                throw UsageError("-k must be at least 1");
            auto partition = partition_by_rs(dm, set);
            out << "set=" << witness_text(partition.subject) << '\n';
            out << "classes=";
            for (std::size_t i = 0; i < partition.classes.size(); ++i)
                out << (i ? " " : "") << '{' << witness_text(partition.classes[i]) << '}';
            out << '\n';
            out << "k_of=" << partition.min_class_size << '\n';
            out << "exact=" << (partition.min_class_size == k ? "true" : "false") << '\n';
            out << "atleast=" << (partition.min_class_size >= k ? "true" : "false") << '\n';
            return exit_ok;
        }

        if (kappa_cmd->parsed()) {
            auto source = load(source_text);
            auto result = kappa(source.graph, bound.value_or(source.graph.order()), threads);
            out << "kappa=" << result.value << " exact=" << (result.exact ? "true" : "false")
                << " witness=" << witness_text(result.witness) << " explored_bound=" << result.explored_bound << '\n';
            return result.exact ? exit_ok : exit_unknown;
        }
    }
    catch (const UsageError & e) {
        err << "antidim: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        err << "antidim: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::Disconnected:
            case Errc::SelfLoop:
            case Errc::GenerationFailed: return exit_data;
            case Errc::ParseError: return parse_error_exit;
            default: return exit_usage;
        }
    }
    catch (const std::ios_base::failure & e) {
        err << "antidim: " << e.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}

} // namespace antidim::cli

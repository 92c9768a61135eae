#include "antidim/solver.hpp"

#include "antidim/error.hpp"
#include "antidim/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace antidim {

namespace {
    constexpr auto no_class = std::numeric_limits<std::uint32_t>::max();
    constexpr auto no_size = std::numeric_limits<std::size_t>::max();

    /// Class labels of every vertex for one prefix of the current set.
    struct Level
    {
        std::vector<std::uint32_t> label;
        std::vector<std::uint32_t> sizes;
    };

    struct NodeInfo
    {
        std::size_t min_size = no_size;
        /// Vertices in classes with fewer than k members, and the smallest of them.
        std::size_t short_total = 0;
        Vertex short_min = 0;
    };

    struct Best
    {
        std::size_t size = no_size;
        VertexSet set;

        auto better_than(const Best & other) const -> bool
        {
            return size < other.size || (size == other.size && size != no_size && set < other.set);
        }
    };

    using Task = std::pair<Vertex, Vertex>;

    class Searcher
    {
    public:
        Searcher(const DistanceMatrix & dm, std::size_t k, Semantics semantics, std::size_t bound,
            std::atomic<std::size_t> & global_best) :
            _dm(dm),
            _n(dm.order()),
            _k(k),
            _semantics(semantics),
            _bound(bound),
            _stride(dm.diameter() + 1),
            _global_best(global_best),
            _levels(_n + 1),
            _scratch(_n * _stride, no_class),
            _current(_n)
        {
            for (auto & level : _levels)
                level.label.resize(_n);
            std::fill(_levels[0].label.begin(), _levels[0].label.end(), 0);
            _levels[0].sizes = { static_cast<std::uint32_t>(_n) };
        }

        /// Visits {v} only; children are queued as tasks instead of explored.
        auto visit_singleton(Vertex v, std::vector<Task> & tasks) -> void
        {
            _current[0] = v;
            refine(0, v);
            visit(1, &tasks);
        }

        auto run_task(const Task & task) -> void
        {
            _current[0] = task.first;
            _current[1] = task.second;
            refine(0, task.first);
            refine(1, task.second);
            visit(2, nullptr);
        }

        auto best() const -> const Best & { return _best; }
        auto truncated() const -> bool { return _truncated; }
        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        // Splits every class of `depth` by distance to z; z itself leaves the
        // partition.
        auto refine(std::size_t depth, Vertex z) -> void
        {
            const auto & parent = _levels[depth];
            auto & child = _levels[depth + 1];
            child.sizes.clear();
            auto row = _dm.row(z);
            for (std::size_t x = 0; x < _n; ++x) {
                auto label = parent.label[x];
                if (label == no_class || x + 1 == z) {
                    child.label[x] = no_class;
                    continue;
                }
                auto key = label * _stride + row[x];
                if (_scratch[key] == no_class) {
                    _scratch[key] = static_cast<std::uint32_t>(child.sizes.size());
                    child.sizes.push_back(0);
                }
                child.label[x] = _scratch[key];
                ++child.sizes[_scratch[key]];
            }
            for (std::size_t x = 0; x < _n; ++x)
                if (child.label[x] != no_class)
                    _scratch[parent.label[x] * _stride + row[x]] = no_class;
        }

        auto inspect(std::size_t depth) const -> NodeInfo
        {
            const auto & level = _levels[depth];
            NodeInfo info;
            for (auto size : level.sizes)
                info.min_size = std::min<std::size_t>(info.min_size, size);
            if (info.min_size >= _k)
                return info;
            for (std::size_t x = 0; x < _n; ++x) {
                auto label = level.label[x];
                if (label != no_class && level.sizes[label] < _k) {
                    if (info.short_total == 0)
                        info.short_min = static_cast<Vertex>(x + 1);
                    ++info.short_total;
                }
            }
            return info;
        }

        auto qualifies(const NodeInfo & info) const -> bool
        {
            if (info.min_size == no_size)
                return false;
            return _semantics == Semantics::Exact ? info.min_size == _k : info.min_size >= _k;
        }

        auto best_limit() const -> std::size_t
        {
            auto local = _best.size == no_size ? no_size : _best.size - 1;
            return std::min(local, _global_best.load(std::memory_order_relaxed));
        }

        auto record(std::size_t depth) -> void
        {
            _best.size = depth;
            _best.set.assign(_current.begin(), _current.begin() + depth);
            auto seen = _global_best.load();
            while (depth < seen && ! _global_best.compare_exchange_weak(seen, depth)) {
            }
        }

        auto visit(std::size_t depth, std::vector<Task> * tasks) -> void
        {
            ++_nodes;
            auto info = inspect(depth);
            if (qualifies(info) && depth < _best.size && depth <= _global_best.load(std::memory_order_relaxed))
                record(depth);

            // Every vertex of a short class must still join S, and only
            // vertices above the last one added can.
            auto last = _current[depth - 1];
            if (info.short_total > 0 && info.short_min <= last)
                return;
            if (_n - depth - info.short_total < _k)
                return;
            Vertex high = info.short_total > 0 ? info.short_min : static_cast<Vertex>(_n);
            if (last >= high)
                return;

            auto needed = depth + std::max<std::size_t>(1, info.short_total);
            if (needed > _n - _k)
                return;

            for (Vertex v = last + 1; v <= high; ++v) {
                if (needed > best_limit())
                    return;
                if (needed > _bound) {
                    _truncated = true;
                    return;
                }
                if (tasks) {
                    tasks->emplace_back(last, v);
                    continue;
                }
                _current[depth] = v;
                refine(depth, v);
                visit(depth + 1, nullptr);
            }
        }

        const DistanceMatrix & _dm;
        std::size_t _n, _k;
        Semantics _semantics;
        std::size_t _bound;
        std::size_t _stride;
        std::atomic<std::size_t> & _global_best;

        std::vector<Level> _levels;
        std::vector<std::uint32_t> _scratch;
        VertexSet _current;

        Best _best;
        bool _truncated = false;
        std::uint64_t _nodes = 0;
    };
}

auto to_string(SolveStatus status) -> const char *
{
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::InfeasibleProven: return "infeasible";
        case SolveStatus::UnknownUpToBound: return "unknown";
    }
    return "?";
}

auto default_bound(std::size_t n, std::size_t k) -> std::size_t
{
    return k >= n ? 0 : std::min<std::size_t>(n - k, 6);
}

auto solve_kmad(const Graph & g, std::size_t k, const SolveOptions & options) -> SolveOutcome
{
    return solve_kmad(g, all_pairs_distances(g), k, options);
}

auto solve_kmad(const Graph & g, const DistanceMatrix & dm, std::size_t k, const SolveOptions & options)
    -> SolveOutcome
{
    if (k < 1)
        throw Error(Errc::InvalidK, "k must be at least 1");
    if (dm.order() != g.order())
        throw Error(Errc::DimensionMismatch, "distance matrix does not match graph");

    auto n = g.order();
    SolveOutcome outcome;
    if (k >= n || k > max_degree(g)) {
        outcome.status = SolveStatus::InfeasibleProven;
        outcome.explored_bound = k >= n ? 0 : n - k;
        return outcome;
    }

    auto bound = std::min(options.bound.value_or(default_bound(n, k)), n - k);
    if (bound == 0) {
        outcome.status = SolveStatus::UnknownUpToBound;
        return outcome;
    }

    std::atomic<std::size_t> global_best{ no_size };
    Searcher first(dm, k, options.semantics, bound, global_best);
    std::vector<Task> tasks;
    for (Vertex v = 1; v <= n && global_best.load() == no_size; ++v)
        first.visit_singleton(v, tasks);

    Best best = first.best();
    bool truncated = first.truncated();
    outcome.nodes = first.nodes();

    if (best.size == no_size && ! tasks.empty()) {
        auto workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(options.threads), tasks.size()));
        std::vector<Searcher> searchers;
        searchers.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            searchers.emplace_back(dm, k, options.semantics, bound, global_best);

        parallel_for(tasks.size(), workers, [&](std::size_t i, unsigned w) { searchers[w].run_task(tasks[i]); });

        for (auto & s : searchers) {
            if (s.best().better_than(best))
                best = s.best();
            truncated = truncated || s.truncated();
            outcome.nodes += s.nodes();
        }
    }

    if (best.size != no_size) {
        outcome.status = SolveStatus::Optimal;
        outcome.cardinality = best.size;
        outcome.witness = std::move(best.set);
        outcome.explored_bound = best.size;
    }
    else if (! truncated || bound >= n - k) {
        outcome.status = SolveStatus::InfeasibleProven;
        outcome.explored_bound = n - k;
    }
    else {
        outcome.status = SolveStatus::UnknownUpToBound;
        outcome.explored_bound = bound;
    }
    return outcome;
}

auto sweep(const Graph & g, std::size_t k_max, const SolveOptions & options)
    -> std::vector<std::pair<std::size_t, SolveOutcome>>
{
    if (k_max < 1)
        throw Error(Errc::InvalidK, "k_max must be at least 1");
    auto dm = all_pairs_distances(g);
    std::vector<std::pair<std::size_t, SolveOutcome>> result;
    for (std::size_t k = 1; k <= k_max; ++k)
        result.emplace_back(k, solve_kmad(g, dm, k, options));
    return result;
}

auto kappa(const Graph & g, std::optional<std::size_t> bound, unsigned threads) -> KappaOutcome
{
    auto dm = all_pairs_distances(g);
    auto n = g.order();
    KappaOutcome outcome;
    if (n == 1) {
        outcome.exact = true;
        return outcome;
    }

    auto limit = bound.value_or(std::min<std::size_t>(n - 1, 6));
    outcome.explored_bound = std::min(limit, n - 1);
    bool all_higher_proven = true;
    for (auto k = std::min(max_degree(g), n - 1); k >= 1; --k) {
        SolveOptions options{ Semantics::AtLeast, std::min(limit, n - k), threads };
        auto result = solve_kmad(g, dm, k, options);
        if (result.status == SolveStatus::Optimal) {
            outcome.value = k;
            outcome.exact = all_higher_proven;
            outcome.witness = std::move(result.witness);
            break;
        }
        if (result.status == SolveStatus::UnknownUpToBound)
            all_higher_proven = false;
    }
    if (outcome.exact)
        outcome.explored_bound = n - 1;
    return outcome;
}

} // namespace antidim

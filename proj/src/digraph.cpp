#include "starmoments/digraph.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/moments.hpp"
#include "starmoments/parallel.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace starmoments {

// ---------------------------------------------------------------------------
// Digraph
// ---------------------------------------------------------------------------

Digraph::Digraph(int n, std::span<const std::pair<int, int>> arcs) : n_(n)
{
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    arcs_.reserve(arcs.size());
    for (const auto& [t, h] : arcs) {
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw InvalidArgument("arc (" + std::to_string(t) + "," + std::to_string(h) +
                                  ") outside vertex range");
        arcs_.push_back({t, h, 0});
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i].tail == arcs_[i - 1].tail && arcs_[i].head == arcs_[i - 1].head)
            arcs_[i].slot = arcs_[i - 1].slot + 1;

    const auto un = static_cast<std::size_t>(n);
    out_offset_.assign(un + 1, 0);
    in_offset_.assign(un + 1, 0);
    for (const auto& a : arcs_) {
        ++out_offset_[static_cast<std::size_t>(a.tail) + 1];
        ++in_offset_[static_cast<std::size_t>(a.head) + 1];
    }
    std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
    std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
    in_ids_.resize(arcs_.size());
    std::vector<int> fill(in_offset_.begin(), in_offset_.end() - 1);
    for (std::size_t id = 0; id < arcs_.size(); ++id)
        in_ids_[static_cast<std::size_t>(fill[static_cast<std::size_t>(arcs_[id].head)]++)] =
            static_cast<int>(id);
}

Digraph Digraph::from_multiplicities(int n, std::span<const std::tuple<int, int, int>> entries)
{
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [t, h, m] : entries) {
        if (m < 1)
            throw InvalidArgument("arc multiplicity must be at least 1");
        for (int i = 0; i < m; ++i)
            arcs.emplace_back(t, h);
    }
    return Digraph(n, arcs);
}

std::vector<std::tuple<int, int, int>> Digraph::multiplicities() const
{
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& a : arcs_) {
        if (a.slot == 0)
            out.emplace_back(a.tail, a.head, 1);
        else
            ++std::get<2>(out.back());
    }
    return out;
}

Digraph Digraph::transpose() const
{
    std::vector<std::pair<int, int>> reversed;
    reversed.reserve(arcs_.size());
    for (const auto& a : arcs_)
        reversed.emplace_back(a.head, a.tail);
    return Digraph(n_, reversed);
}

bool is_d_regular(const Digraph& g, int d)
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) != d || g.in_degree(v) != d)
            return false;
    return true;
}

bool is_simple(const Digraph& g)
{
    return std::none_of(g.arcs().begin(), g.arcs().end(),
                        [](const Arc& a) { return a.tail == a.head || a.slot > 0; });
}

// ---------------------------------------------------------------------------
// Walk counting
// ---------------------------------------------------------------------------

namespace {

void add_product(WideCount& acc, WideCount a, WideCount b)
{
    WideCount p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc))
        throw ArithmeticOverflow("walk count exceeds 128 bits");
}

using SparseRow = std::vector<std::pair<int, WideCount>>;

// Sparse row vector times A (ONE) or A* (STAR), with a dense scratch
// accumulator that is left zeroed after each step.
class Propagator {
public:
    explicit Propagator(const Digraph& g)
      : g_(g), scratch_(static_cast<std::size_t>(g.vertex_count()), 0)
    {}

    void step(const SparseRow& in, Letter letter, SparseRow& out)
    {
        touched_.clear();
        auto bump = [&](int u, WideCount c) {
            auto& s = scratch_[static_cast<std::size_t>(u)];
            if (s == 0)
                touched_.push_back(u);
            add_product(s, c, 1);
        };
        for (const auto& [u, c] : in) {
            if (letter == Letter::One) {
                const auto [b, e] = g_.out_range(u);
                for (int id = b; id < e; ++id)
                    bump(g_.arc(id).head, c);
            } else {
                for (int id : g_.in_arcs(u))
                    bump(g_.arc(id).tail, c);
            }
        }
        std::sort(touched_.begin(), touched_.end());
        out.clear();
        out.reserve(touched_.size());
        for (int u : touched_) {
            auto& s = scratch_[static_cast<std::size_t>(u)];
            out.emplace_back(u, s);
            s = 0;
        }
    }

private:
    const Digraph& g_;
    std::vector<WideCount> scratch_;
    std::vector<int> touched_;
};

WideCount entry(const SparseRow& row, int col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? it->second : 0;
}

WideCount diagonal_walks(Propagator& prop, int v, const Word& w)
{
    SparseRow cur{{v, 1}}, next;
    for (auto letter : w) {
        prop.step(cur, letter, next);
        std::swap(cur, next);
        if (cur.empty())
            return 0;
    }
    return entry(cur, v);
}

void check_vertex(const Digraph& g, int v)
{
    if (v < 0 || v >= g.vertex_count())
        throw IndexOutOfRange("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(g.vertex_count() - 1));
}

} // namespace

BigInt walk_count_diagonal(const Digraph& g, int v, const Word& w)
{
    check_vertex(g, v);
    Propagator prop(g);
    return to_bigint(diagonal_walks(prop, v, w));
}

BigInt trace_per_vertex(const Digraph& g, const Word& w, unsigned threads)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<WideCount> diag(n, 0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        Propagator prop(g);
        for (std::size_t v = begin; v < end; ++v)
            diag[v] = diagonal_walks(prop, static_cast<int>(v), w);
    });
    WideCount total = 0;
    for (auto x : diag)
        add_product(total, x, 1);
    return to_bigint(total);
}

BigInt trace_sparse_product(const Digraph& g, const Word& w, unsigned threads)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<SparseRow> rows(n), next(n);
    for (std::size_t r = 0; r < n; ++r)
        rows[r] = {{static_cast<int>(r), 1}};
    for (auto letter : w) {
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            Propagator prop(g);
            for (std::size_t r = begin; r < end; ++r)
                prop.step(rows[r], letter, next[r]);
        });
        std::swap(rows, next);
    }
    WideCount total = 0;
    for (std::size_t r = 0; r < n; ++r)
        add_product(total, entry(rows[r], static_cast<int>(r)), 1);
    return to_bigint(total);
}

BigInt star_moment_trace(const Digraph& g, const Word& w, const TraceOptions& opts)
{
    if (g.vertex_count() > opts.sparse_threshold)
        return trace_sparse_product(g, w, opts.threads);
    return trace_per_vertex(g, w, opts.threads);
}

// ---------------------------------------------------------------------------
// Plain cycles
// ---------------------------------------------------------------------------

namespace {

// Undirected distances from a source, capped at `radius + 1` outside the
// ball. Reused across sources via a generation stamp.
class BoundedBfs {
public:
    explicit BoundedBfs(const Digraph& g)
      : g_(g), dist_(static_cast<std::size_t>(g.vertex_count()), 0),
        stamp_(static_cast<std::size_t>(g.vertex_count()), 0)
    {}

    void run(int source, int radius)
    {
        ++generation_;
        radius_ = radius;
        frontier_.clear();
        mark(source, 0);
        frontier_.push_back(source);
        for (std::size_t i = 0; i < frontier_.size(); ++i) {
            const int u = frontier_[i];
            const int du = dist_[static_cast<std::size_t>(u)];
            if (du == radius)
                continue;
            auto visit = [&](int x) {
                if (stamp_[static_cast<std::size_t>(x)] != generation_) {
                    mark(x, du + 1);
                    frontier_.push_back(x);
                }
            };
            const auto [b, e] = g_.out_range(u);
            for (int id = b; id < e; ++id)
                visit(g_.arc(id).head);
            for (int id : g_.in_arcs(u))
                visit(g_.arc(id).tail);
        }
    }

    int distance(int v) const
    {
        return stamp_[static_cast<std::size_t>(v)] == generation_ ? dist_[static_cast<std::size_t>(v)]
                                                                  : radius_ + 1;
    }

private:
    void mark(int v, int d)
    {
        stamp_[static_cast<std::size_t>(v)] = generation_;
        dist_[static_cast<std::size_t>(v)] = d;
    }

    const Digraph& g_;
    std::vector<int> dist_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t generation_ = 0;
    int radius_ = 0;
    std::vector<int> frontier_;
};

// Depth-first search over arc-injective walks that must end at `origin`
// after exactly `length` steps (or, with stop_on_return, at any step).
class TrailSearch {
public:
    TrailSearch(const Digraph& g, int length) : g_(g), length_(length), bfs_(g)
    {
        used_.reserve(static_cast<std::size_t>(length));
    }

    /// Closed sequences starting with `first` traversed forward and using
    /// only arcs with larger ids afterwards.
    std::uint64_t count_canonical(int first)
    {
        const Arc& a = g_.arc(first);
        origin_ = a.tail;
        min_id_ = first + 1;
        bfs_.run(origin_, length_ / 2);
        used_.assign(1, first);
        stop_on_return_ = false;
        return extend(a.head, length_ - 1);
    }

    /// All closed sequences of the full length starting at v.
    std::uint64_t count_from(int v)
    {
        origin_ = v;
        min_id_ = 0;
        bfs_.run(origin_, length_ / 2);
        used_.clear();
        stop_on_return_ = false;
        return extend(v, length_);
    }

    /// Whether some arc-injective walk of length 1..length returns to v.
    bool returns_to(int v)
    {
        origin_ = v;
        min_id_ = 0;
        bfs_.run(origin_, length_ / 2);
        used_.clear();
        stop_on_return_ = true;
        return extend(v, length_) > 0;
    }

private:
    std::uint64_t extend(int at, int remaining)
    {
        if (stop_on_return_ && !used_.empty() && at == origin_)
            return 1;
        if (remaining == 0)
            return at == origin_ ? 1 : 0;
        if (bfs_.distance(at) > remaining)
            return 0;
        std::uint64_t total = 0;
        auto take = [&](int id, int to) {
            if (id < min_id_ || std::find(used_.begin(), used_.end(), id) != used_.end())
                return false;
            used_.push_back(id);
            const std::uint64_t found = extend(to, remaining - 1);
            used_.pop_back();
            if (__builtin_add_overflow(total, found, &total))
                throw ArithmeticOverflow("cycle count exceeds 64 bits");
            return stop_on_return_ && found > 0;
        };
        const auto [b, e] = g_.out_range(at);
        for (int id = b; id < e; ++id)
            if (take(id, g_.arc(id).head))
                return total;
        for (int id : g_.in_arcs(at))
            if (take(id, g_.arc(id).tail))
                return total;
        return total;
    }

    const Digraph& g_;
    int length_;
    BoundedBfs bfs_;
    std::vector<int> used_;
    int origin_ = 0;
    int min_id_ = 0;
    bool stop_on_return_ = false;
};

void check_cycle_length(int j)
{
    if (j < 1)
        throw InvalidArgument("cycle length must be at least 1");
    if (j > kMaxCycleLength)
        throw CapExceeded("cycle length " + std::to_string(j) + " exceeds " +
                          std::to_string(kMaxCycleLength));
}

template <typename PerItem>
std::uint64_t parallel_sum(std::size_t count, unsigned threads, const Digraph& g, int j,
                           PerItem per_item)
{
    std::vector<std::uint64_t> partial(count, 0);
    parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
        TrailSearch search(g, j);
        for (std::size_t i = begin; i < end; ++i)
            partial[i] = per_item(search, static_cast<int>(i));
    });
    std::uint64_t total = 0;
    for (auto x : partial)
        if (__builtin_add_overflow(total, x, &total))
            throw ArithmeticOverflow("cycle count exceeds 64 bits");
    return total;
}

} // namespace

std::uint64_t plain_cycle_raw_sum(const Digraph& g, int j, unsigned threads)
{
    check_cycle_length(j);
    return parallel_sum(static_cast<std::size_t>(g.vertex_count()), threads, g, j,
                        [](TrailSearch& s, int v) { return s.count_from(v); });
}

CycleCount plain_cycle_count(const Digraph& g, int j, CycleMethod method, unsigned threads)
{
    check_cycle_length(j);
    if (method == CycleMethod::Auto)
        method = j <= kCanonicalCycleLength ? CycleMethod::Canonical : CycleMethod::RawSum;
    if (method == CycleMethod::Canonical) {
        const auto count = parallel_sum(g.arc_count(), threads, g, j,
                                        [](TrailSearch& s, int id) { return s.count_canonical(id); });
        return {j, count};
    }
    const std::uint64_t raw = plain_cycle_raw_sum(g, j, threads);
    const auto norm = static_cast<std::uint64_t>(2 * j);
    if (raw % norm != 0)
        throw NormalizationFailure("raw plain-cycle sum " + std::to_string(raw) +
                                   " not divisible by " + std::to_string(norm));
    return {j, raw / norm};
}

std::vector<int> bad_vertex_set(const Digraph& g, int k, unsigned threads)
{
    if (k < 0)
        throw InvalidArgument("radius must be non-negative");
    if (k > kMaxCycleLength)
        throw CapExceeded("radius " + std::to_string(k) + " exceeds " +
                          std::to_string(kMaxCycleLength));
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> on_cycle(n, 0);
    if (k >= 1) {
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            TrailSearch search(g, k);
            for (std::size_t v = begin; v < end; ++v)
                on_cycle[v] = search.returns_to(static_cast<int>(v)) ? 1 : 0;
        });
    }

    // multi-source breadth-first search, orientation ignored
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (on_cycle[v]) {
            dist[v] = 0;
            queue.push_back(static_cast<int>(v));
        }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<std::size_t>(u)];
        if (du == k)
            continue;
        auto visit = [&](int x) {
            if (dist[static_cast<std::size_t>(x)] < 0) {
                dist[static_cast<std::size_t>(x)] = du + 1;
                queue.push_back(x);
            }
        };
        const auto [b, e] = g.out_range(u);
        for (int id = b; id < e; ++id)
            visit(g.arc(id).head);
        for (int id : g.in_arcs(u))
            visit(g.arc(id).tail);
    }
    std::vector<int> out;
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] >= 0)
            out.push_back(static_cast<int>(v));
    return out;
}

// ---------------------------------------------------------------------------
// Tree-likeness
// ---------------------------------------------------------------------------

namespace {

struct WordTrieCheck {
    const std::vector<BigInt>& expected; // indexed by (length, bits) via offset
    Propagator& prop;
    int vertex;
    int radius;
    std::vector<Letter> letters;
    std::vector<TreeViolation>& out;

    // expected value index: words of length L occupy [2^L - 1, 2^{L+1} - 1)
    void walk(const SparseRow& row, std::size_t code)
    {
        const auto len = letters.size();
        if (len > 0) {
            const WideCount observed = entry(row, vertex);
            const std::size_t index = ((std::size_t{1} << len) - 1) + code;
            if (to_bigint(observed) != expected[index])
                out.push_back({vertex, Word(letters), to_bigint(observed), expected[index]});
        }
        if (static_cast<int>(len) == radius)
            return;
        SparseRow next;
        for (auto letter : {Letter::One, Letter::Star}) {
            prop.step(row, letter, next);
            letters.push_back(letter);
            walk(next, code * 2 + (letter == Letter::Star ? 1 : 0));
            letters.pop_back();
        }
    }
};

} // namespace

TreeCheckReport tree_likeness_check(const Digraph& g, int d, int k, unsigned threads)
{
    if (!is_d_regular(g, d))
        throw NotRegular("graph is not " + std::to_string(d) + "-regular");
    if (k < 1)
        throw InvalidArgument("radius must be at least 1");
    const auto bad = bad_vertex_set(g, k, threads);

    // tree moments for all words of length 1..k, indexed like WordTrieCheck
    std::vector<BigInt> expected((std::size_t{1} << (k + 1)) - 1);
    for (int len = 1; len <= k; ++len) {
        const auto words = all_words(static_cast<std::size_t>(len));
        for (std::size_t code = 0; code < words.size(); ++code)
            expected[((std::size_t{1} << len) - 1) + code] = star_moment_formula(words[code], d);
    }

    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> is_bad(n, 0);
    for (int v : bad)
        is_bad[static_cast<std::size_t>(v)] = 1;

    std::vector<std::vector<TreeViolation>> per_vertex(n);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        Propagator prop(g);
        for (std::size_t v = begin; v < end; ++v) {
            if (is_bad[v])
                continue;
            WordTrieCheck check{expected, prop, static_cast<int>(v), k, {}, per_vertex[v]};
            check.walk(SparseRow{{static_cast<int>(v), 1}}, 0);
        }
    });

    TreeCheckReport report;
    report.vertices = g.vertex_count();
    report.degree = d;
    report.radius = k;
    report.bad_vertices = bad.size();
    report.bad_fraction = n == 0 ? 0.0 : static_cast<double>(bad.size()) / static_cast<double>(n);
    report.checked_vertices = n - bad.size();
    report.words_per_vertex = (std::size_t{1} << (k + 1)) - 2;
    for (auto& vs : per_vertex)
        for (auto& v : vs)
            report.violations.push_back(std::move(v));
    return report;
}

} // namespace starmoments

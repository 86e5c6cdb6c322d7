#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/words.hpp"

#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace starmoments {

/// One arc of a multidigraph. Parallel arcs share (tail, head) and are told
/// apart by `slot`. Vertices are 0-based.
struct Arc {
    int tail = 0;
    int head = 0;
    int slot = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable multidigraph on vertices 0..n-1. Arc ids index arcs(), which is
/// sorted by (tail, head, slot).
class Digraph {
public:
    Digraph() = default;

    /// Throws InvalidArgument for endpoints outside 0..n-1.
    Digraph(int n, std::span<const std::pair<int, int>> arcs);

    /// From (tail, head, multiplicity) triples; multiplicities must be >= 1.
    static Digraph from_multiplicities(int n,
                                       std::span<const std::tuple<int, int, int>> entries);

    int vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }

    /// Ids of arcs leaving v (a contiguous range of arc ids).
    std::pair<int, int> out_range(int v) const
    {
        return {out_offset_[static_cast<std::size_t>(v)],
                out_offset_[static_cast<std::size_t>(v) + 1]};
    }
    /// Ids of arcs entering v.
    std::span<const int> in_arcs(int v) const
    {
        const auto b = static_cast<std::size_t>(in_offset_[static_cast<std::size_t>(v)]);
        const auto e = static_cast<std::size_t>(in_offset_[static_cast<std::size_t>(v) + 1]);
        return std::span<const int>(in_ids_).subspan(b, e - b);
    }

    int out_degree(int v) const { return out_range(v).second - out_range(v).first; }
    int in_degree(int v) const { return static_cast<int>(in_arcs(v).size()); }

    /// (tail, head, multiplicity) triples sorted by (tail, head).
    std::vector<std::tuple<int, int, int>> multiplicities() const;

    /// Same vertices, every arc reversed.
    Digraph transpose() const;

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_offset_{0};
    std::vector<int> in_offset_{0};
    std::vector<int> in_ids_;
};

/// Every vertex has in- and out-degree d, counting multiplicity.
bool is_d_regular(const Digraph& g, int d);

/// No self-loops and no parallel arcs.
bool is_simple(const Digraph& g);

/// A^w(v, v): closed walks at v reading ONE as an arc forward and STAR as
/// an arc backward.
BigInt walk_count_diagonal(const Digraph& g, int v, const Word& w);

struct TraceOptions {
    /// Graphs with more vertices than this use sparse matrix products.
    int sparse_threshold = 512;
    unsigned threads = 1;
};

/// Tr A^w, exact.
BigInt star_moment_trace(const Digraph& g, const Word& w, const TraceOptions& opts = {});

/// Tr A^w as the sum of per-vertex walk propagations.
BigInt trace_per_vertex(const Digraph& g, const Word& w, unsigned threads = 1);

/// Tr A^w from the product A^{w_1} ... A^{w_k} built one sparse factor at a time.
BigInt trace_sparse_product(const Digraph& g, const Word& w, unsigned threads = 1);

constexpr int kMaxCycleLength = 12;
/// Largest length counted by canonical representatives in CycleMethod::Auto.
constexpr int kCanonicalCycleLength = 6;

enum class CycleMethod { Auto, Canonical, RawSum };

struct CycleCount {
    int length = 0;
    std::uint64_t count = 0;
};

/// Number of plain cycles of length j: cyclic sequences of j distinct arcs
/// traversed in either orientation, up to rotation and reversal.
/// Throws CapExceeded for j > kMaxCycleLength and NormalizationFailure when
/// the raw sum is not divisible by 2j.
CycleCount plain_cycle_count(const Digraph& g, int j, CycleMethod method = CycleMethod::Auto,
                             unsigned threads = 1);

/// The unnormalized sum over words and closed arc-injective vertex sequences.
std::uint64_t plain_cycle_raw_sum(const Digraph& g, int j, unsigned threads = 1);

/// Vertices within undirected distance k of a vertex lying on a plain cycle
/// of length <= k, sorted. Throws CapExceeded for k > kMaxCycleLength.
std::vector<int> bad_vertex_set(const Digraph& g, int k, unsigned threads = 1);

struct TreeViolation {
    int vertex = 0;
    Word word;
    BigInt observed;
    BigInt expected;
};

struct TreeCheckReport {
    int vertices = 0;
    int degree = 0;
    int radius = 0;
    std::size_t bad_vertices = 0;
    double bad_fraction = 0.0;
    std::size_t checked_vertices = 0;
    std::size_t words_per_vertex = 0;
    std::vector<TreeViolation> violations;
};

/// Compares A^w(v, v) with the tree moment M(w) for every vertex outside
/// bad_vertex_set(g, k) and every word of length 1..k. Throws NotRegular.
TreeCheckReport tree_likeness_check(const Digraph& g, int d, int k, unsigned threads = 1);

} // namespace starmoments

#include "starmoments/partitions.hpp"

#include "starmoments/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace starmoments {

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<Block> blocks, int ground_size)
  : blocks_(std::move(blocks)), ground_size_(ground_size)
{
    if (ground_size < 0)
        throw InvalidPartition("negative ground size");
    std::vector<bool> seen(static_cast<std::size_t>(ground_size) + 1, false);
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw InvalidPartition("empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > ground_size)
                throw InvalidPartition("element " + std::to_string(x) + " outside 1.." +
                                       std::to_string(ground_size));
            if (seen[static_cast<std::size_t>(x)])
                throw InvalidPartition("element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = true;
        }
        total += b.size();
    }
    if (total != static_cast<std::size_t>(ground_size))
        throw InvalidPartition("blocks do not cover 1.." + std::to_string(ground_size));
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

Partition Partition::from_blocks(std::vector<Block> blocks)
{
    std::size_t total = 0;
    for (const auto& b : blocks)
        total += b.size();
    return Partition(std::move(blocks), static_cast<int>(total));
}

std::size_t Partition::block_index_of(int element) const
{
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
            return i;
    throw IndexOutOfRange("element " + std::to_string(element) + " not in partition");
}

bool Partition::is_pair_partition() const noexcept
{
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.size() == 2; });
}

std::string Partition::str() const
{
    if (blocks_.empty())
        return "{}";
    std::string s;
    for (const auto& b : blocks_) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(b[i]);
        }
        s += '}';
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

namespace {

std::vector<std::size_t> labels_of(const Partition& p)
{
    std::vector<std::size_t> label(static_cast<std::size_t>(p.ground_size()) + 1, 0);
    for (std::size_t i = 0; i < p.blocks().size(); ++i)
        for (int x : p.blocks()[i])
            label[static_cast<std::size_t>(x)] = i;
    return label;
}

bool crosses(const Block& a, const Block& b)
{
    // a and b cross iff the merged sequence of owners has at least 4 runs
    std::size_t i = 0, j = 0, runs = 0;
    int last = -1;
    while (i < a.size() || j < b.size()) {
        int owner;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            owner = 0;
            ++i;
        } else {
            owner = 1;
            ++j;
        }
        if (owner != last) {
            ++runs;
            last = owner;
        }
    }
    return runs >= 4;
}

} // namespace

bool is_noncrossing(const Partition& p)
{
    const auto& bs = p.blocks();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (crosses(bs[i], bs[j]))
                return false;
    return true;
}

bool is_alternating_wrt(const Partition& p, const Word& w)
{
    if (static_cast<std::size_t>(p.ground_size()) != w.size())
        return false;
    return std::all_of(p.blocks().begin(), p.blocks().end(),
                       [&](const Block& b) { return is_alternating(subword(w, b)); });
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Builds blocks in canonical order. The block holding the smallest unused
// element is grown inside the region that element lives in; once committed,
// its elements cut that region into independent gaps, and every later block
// must stay inside a single region. Blocks are tried in prefix-first
// lexicographic order, so partitions come out lexicographically sorted.
class NoncrossingSearch {
public:
    NoncrossingSearch(int k, const BlockRule& rule,
                      const std::function<void(std::span<const Block>)>& visit)
      : k_(k), rule_(rule), visit_(visit), region_(static_cast<std::size_t>(k) + 1, 0),
        used_(static_cast<std::size_t>(k) + 1, false)
    {}

    void run() { descend(); }

private:
    void descend()
    {
        int m = 1;
        while (m <= k_ && used_[idx(m)])
            ++m;
        if (m > k_) {
            visit_(std::span<const Block>(blocks_));
            return;
        }
        blocks_.push_back(Block{m});
        used_[idx(m)] = true;
        grow();
        used_[idx(m)] = false;
        blocks_.pop_back();
    }

    void grow()
    {
        const std::size_t top = blocks_.size() - 1;
        if (complete(blocks_[top]))
            commit();
        if (rule_.block_size != 0 && blocks_[top].size() >= rule_.block_size)
            return;
        const int first = blocks_[top].front();
        for (int e = blocks_[top].back() + 1; e <= k_; ++e) {
            if (used_[idx(e)] || region_[idx(e)] != region_[idx(first)])
                continue;
            if (rule_.word && letter(e) == letter(blocks_[top].back()))
                continue;
            blocks_[top].push_back(e);
            used_[idx(e)] = true;
            grow();
            used_[idx(e)] = false;
            blocks_[top].pop_back();
        }
    }

    bool complete(const Block& b) const
    {
        if (rule_.block_size != 0 && b.size() != rule_.block_size)
            return false;
        if (rule_.word && b.size() % 2 != 0)
            return false;
        return true;
    }

    void commit()
    {
        const Block b = blocks_.back();
        const int home = region_[idx(b.front())];
        const std::vector<int> saved = region_;

        // per gap: number of free elements and (#ONE - #STAR)
        std::vector<int> count(b.size(), 0), balance(b.size(), 0);
        for (int e = b.front() + 1; e <= k_; ++e) {
            if (used_[idx(e)] || region_[idx(e)] != home)
                continue;
            const auto gap = static_cast<std::size_t>(
                std::upper_bound(b.begin(), b.end(), e) - b.begin());
            if (gap < b.size())
                region_[idx(e)] = next_region_ + static_cast<int>(gap);
            const std::size_t g = gap - 1;
            ++count[g];
            if (rule_.word)
                balance[g] += letter(e) == Letter::One ? 1 : -1;
        }
        bool feasible = true;
        for (std::size_t g = 0; g < b.size(); ++g) {
            if (rule_.block_size != 0 && count[g] % static_cast<int>(rule_.block_size) != 0)
                feasible = false;
            if (rule_.word && balance[g] != 0)
                feasible = false;
        }
        if (feasible) {
            next_region_ += static_cast<int>(b.size());
            descend();
            next_region_ -= static_cast<int>(b.size());
        }
        region_ = saved;
    }

    Letter letter(int e) const { return (*rule_.word)[idx(e) - 1]; }
    static std::size_t idx(int e) { return static_cast<std::size_t>(e); }

    int k_;
    const BlockRule& rule_;
    const std::function<void(std::span<const Block>)>& visit_;
    std::vector<int> region_;
    std::vector<bool> used_;
    std::vector<Block> blocks_;
    int next_region_ = 1;
};

void check_cap(int k, int cap)
{
    if (k < 0)
        throw InvalidArgument("ground size must be non-negative");
    if (k > cap)
        throw CapExceeded("ground size " + std::to_string(k) + " exceeds the enumeration cap " +
                          std::to_string(cap));
}

std::vector<Partition> collect(int k, const BlockRule& rule)
{
    std::vector<Partition> out;
    for_each_noncrossing(k, rule, [&](std::span<const Block> blocks) {
        out.emplace_back(std::vector<Block>(blocks.begin(), blocks.end()), k);
    });
    return out;
}

} // namespace

void for_each_noncrossing(int k, const BlockRule& rule,
                          const std::function<void(std::span<const Block>)>& visit)
{
    if (k < 0)
        throw InvalidArgument("ground size must be non-negative");
    if (rule.word && rule.word->size() != static_cast<std::size_t>(k))
        throw GroundSizeMismatch("word length differs from ground size");
    NoncrossingSearch(k, rule, visit).run();
}

std::vector<Partition> enumerate_nc(int k, int cap)
{
    check_cap(k, cap);
    return collect(k, BlockRule{});
}

std::vector<Partition> enumerate_nc2(int k, int cap)
{
    check_cap(k, cap);
    return collect(k, BlockRule{nullptr, 2});
}

std::vector<Partition> enumerate_anc(const Word& w)
{
    return collect(static_cast<int>(w.size()), BlockRule{&w, 0});
}

std::vector<Partition> enumerate_anc2(const Word& w)
{
    return collect(static_cast<int>(w.size()), BlockRule{&w, 2});
}

BigInt catalan(int m)
{
    if (m < 0)
        throw InvalidArgument("catalan index must be non-negative");
    // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step
    BigInt c = 1;
    for (int i = 0; i < m; ++i)
        c = c * (2 * (2 * i + 1)) / (i + 2);
    return c;
}

// ---------------------------------------------------------------------------
// Bad pairs, skeleton, fibers
// ---------------------------------------------------------------------------

namespace {

void require_anc2(const Partition& p, const Word& w)
{
    if (static_cast<std::size_t>(p.ground_size()) != w.size())
        throw GroundSizeMismatch("partition of 1.." + std::to_string(p.ground_size()) +
                                 " against word of length " + std::to_string(w.size()));
    if (!p.is_pair_partition())
        throw NotPairPartition("not a pair partition: " + p.str());
    if (!is_noncrossing(p))
        throw InvalidPartition("crossing partition: " + p.str());
    if (!is_alternating_wrt(p, w))
        throw NotAlternating(p.str() + " is not alternating w.r.t. " + w.str());
}

// For a non-crossing pair partition: index of the directly surrounding block,
// or -1 for outermost blocks.
std::vector<int> parent_blocks(const Partition& p)
{
    const auto label = labels_of(p);
    std::vector<int> parent(p.size(), -1);
    std::vector<std::size_t> open;
    for (int x = 1; x <= p.ground_size(); ++x) {
        const std::size_t b = label[static_cast<std::size_t>(x)];
        if (p.blocks()[b].front() == x) {
            parent[b] = open.empty() ? -1 : static_cast<int>(open.back());
            open.push_back(b);
        } else {
            open.pop_back();
        }
    }
    return parent;
}

} // namespace

std::vector<BadPair> bad_pairs(const Partition& p, const Word& w)
{
    require_anc2(p, w);
    const auto parent = parent_blocks(p);
    std::vector<BadPair> out;
    for (std::size_t u = 0; u < p.size(); ++u) {
        if (parent[u] < 0)
            continue;
        const int outer = p.blocks()[static_cast<std::size_t>(parent[u])].front();
        const int inner = p.blocks()[u].front();
        if (w.at_position(static_cast<std::size_t>(outer)) !=
            w.at_position(static_cast<std::size_t>(inner)))
            out.push_back({outer, inner});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Block> bad_blocks(const Partition& p, const Word& w)
{
    std::vector<Block> out;
    for (const auto& bp : bad_pairs(p, w))
        out.push_back(p.blocks()[p.block_index_of(bp.inner)]);
    std::sort(out.begin(), out.end());
    return out;
}

Partition skeleton(const Word& w, const Path& path, int d)
{
    if (!is_closed_path(w, path, d))
        throw NotAClosedPath("(" + format_path(path) + ") is not a closed " + w.str() +
                             "-path in the " + std::to_string(d) + "-regular tree");
    const auto v = prefix_products(w, path);
    std::vector<Block> blocks;
    // decompose(a, b): positions a..b form a closed path from v[a-1]
    std::function<void(int, int)> decompose = [&](int a, int b) {
        while (a <= b) {
            int r = a + 1;
            while (v[static_cast<std::size_t>(r)] != v[static_cast<std::size_t>(a - 1)])
                ++r;
            blocks.push_back({a, r});
            decompose(a + 1, r - 1);
            a = r + 1;
        }
    };
    decompose(1, static_cast<int>(w.size()));
    return Partition(std::move(blocks), static_cast<int>(w.size()));
}

BigInt preimage_size(const Partition& p, const Word& w, int d)
{
    if (d < 1)
        throw InvalidArgument("degree must be at least 1");
    const std::size_t bad = bad_pairs(p, w).size();
    BigInt out = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        out *= i < bad ? d - 1 : d;
    return out;
}

std::vector<Path> enumerate_preimage(const Partition& p, const Word& w, int d)
{
    const auto pairs = bad_pairs(p, w);
    check_path_budget(p.size(), d);

    // forbidden[b]: earlier block whose value block b must avoid
    std::vector<int> forbidden(p.size(), -1);
    for (const auto& bp : pairs)
        forbidden[p.block_index_of(bp.inner)] = static_cast<int>(p.block_index_of(bp.outer));

    std::vector<Path> out;
    std::vector<int> value(p.size(), 0);
    Path tuple(w.size(), 0);
    std::function<void(std::size_t)> assign = [&](std::size_t b) {
        if (b == p.size()) {
            for (std::size_t i = 0; i < p.size(); ++i)
                for (int x : p.blocks()[i])
                    tuple[static_cast<std::size_t>(x) - 1] = value[i];
            out.push_back(tuple);
            return;
        }
        for (int i = 1; i <= d; ++i) {
            if (forbidden[b] >= 0 && value[static_cast<std::size_t>(forbidden[b])] == i)
                continue;
            value[b] = i;
            assign(b + 1);
        }
    };
    assign(0);
    return out;
}

Partition gamma_merge(const Partition& p, const Word& w, std::span<const BadPair> merges)
{
    const auto pairs = bad_pairs(p, w);
    std::vector<std::size_t> root(p.size());
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& m : merges) {
        if (!std::binary_search(pairs.begin(), pairs.end(), m))
            throw PairNotBad("(" + std::to_string(m.outer) + "," + std::to_string(m.inner) +
                             ") is not a bad pair of " + p.str());
        root[find(p.block_index_of(m.inner))] = find(p.block_index_of(m.outer));
    }
    std::vector<Block> merged(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto& dst = merged[find(i)];
        dst.insert(dst.end(), p.blocks()[i].begin(), p.blocks()[i].end());
    }
    std::erase_if(merged, [](const Block& b) { return b.empty(); });
    return Partition(std::move(merged), p.ground_size());
}

bool is_refinement(const Partition& finer, const Partition& coarser)
{
    if (finer.ground_size() != coarser.ground_size())
        throw GroundSizeMismatch("partitions of different ground sets");
    const auto label = labels_of(coarser);
    return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](const Block& b) {
        return std::all_of(b.begin(), b.end(), [&](int x) {
            return label[static_cast<std::size_t>(x)] == label[static_cast<std::size_t>(b.front())];
        });
    });
}

} // namespace starmoments

#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/freegroup.hpp"
#include "starmoments/words.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace starmoments {

/// Ascending 1-based elements of one block.
using Block = std::vector<int>;

/// Set partition of {1..k} in canonical form: blocks ordered by their
/// minimum, elements ascending. Equality and ordering are structural, and
/// ordering is lexicographic on the block sequence.
class Partition {
public:
    /// The empty partition of the empty set.
    Partition() = default;

    /// Canonicalizes `blocks`; throws InvalidPartition unless they are
    /// non-empty, pairwise disjoint and cover exactly {1..ground_size}.
    Partition(std::vector<Block> blocks, int ground_size);

    /// Ground size inferred as the total number of elements.
    static Partition from_blocks(std::vector<Block> blocks);

    int ground_size() const noexcept { return ground_size_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    /// Index into blocks() of the block containing `element`.
    std::size_t block_index_of(int element) const;

    bool is_pair_partition() const noexcept;

    /// "{1,8}{2,3}..."; the empty partition prints as "{}".
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Block> blocks_;
    int ground_size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Pair (j, j') of block minima where the block starting at j' is directly
/// surrounded by the block starting at j and starts with the other letter.
struct BadPair {
    int outer = 0;
    int inner = 0;

    friend bool operator==(const BadPair&, const BadPair&) = default;
    friend auto operator<=>(const BadPair&, const BadPair&) = default;
};

constexpr int kNoncrossingCap = 14;

bool is_noncrossing(const Partition& p);

/// Every block induces an alternating subword of w (ground size must match).
bool is_alternating_wrt(const Partition& p, const Word& w);

/// Constraints on the blocks produced by for_each_noncrossing.
struct BlockRule {
    /// When set, every block must induce an alternating subword of *word.
    const Word* word = nullptr;
    /// When non-zero, every block must have exactly this many elements.
    std::size_t block_size = 0;
};

/// Visits every non-crossing partition of {1..k} satisfying `rule`, in
/// lexicographic order of the canonical form. The span holds the blocks in
/// canonical order and is only valid during the callback.
void for_each_noncrossing(int k, const BlockRule& rule,
                          const std::function<void(std::span<const Block>)>& visit);

/// NC(k). Throws CapExceeded for k > cap.
std::vector<Partition> enumerate_nc(int k, int cap = kNoncrossingCap);

/// NC_2(k): non-crossing pair partitions; empty for odd k.
std::vector<Partition> enumerate_nc2(int k, int cap = kNoncrossingCap);

/// ANC(w): non-crossing partitions whose blocks are all alternating in w.
std::vector<Partition> enumerate_anc(const Word& w);

/// ANC_2(w): the pair partitions in ANC(w).
std::vector<Partition> enumerate_anc2(const Word& w);

BigInt catalan(int m);

/// Bad pairs of p with respect to w, sorted. Requires p in ANC_2(w):
/// throws NotPairPartition, NotAlternating, InvalidPartition (crossing) or
/// GroundSizeMismatch otherwise.
std::vector<BadPair> bad_pairs(const Partition& p, const Word& w);

/// Blocks whose minimum is the inner index of a bad pair, in canonical order.
std::vector<Block> bad_blocks(const Partition& p, const Word& w);

/// The first-return skeleton of a closed w-path. Throws NotAClosedPath.
Partition skeleton(const Word& w, const Path& path, int d);

/// prod over blocks of (d - [block is bad]): the size of the skeleton fiber.
BigInt preimage_size(const Partition& p, const Word& w, int d);

/// The fiber of p under the skeleton map: all tuples in [d]^|w| equal on
/// every block and unequal across every bad pair, in lexicographic order.
/// Throws CapExceeded when d^|p| > kPathCap.
std::vector<Path> enumerate_preimage(const Partition& p, const Word& w, int d);

/// Coarsening of p obtained by merging, for each (j, j') in `merges`, the
/// block of j' into the block of j. Throws PairNotBad unless every pair is
/// a bad pair of p with respect to w.
Partition gamma_merge(const Partition& p, const Word& w, std::span<const BadPair> merges);

/// True iff every block of `finer` lies inside a block of `coarser`.
/// Throws GroundSizeMismatch.
bool is_refinement(const Partition& finer, const Partition& coarser);

} // namespace starmoments

template <>
struct std::hash<starmoments::Partition> {
    std::size_t operator()(const starmoments::Partition& p) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(p.ground_size());
        for (const auto& b : p.blocks()) {
            for (int x : b)
                h = h * 31 + static_cast<std::size_t>(x);
            h = h * 131 + 7;
        }
        return h;
    }
};

#include "oracles.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/freegroup.hpp"
#include "starmoments/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace starmoments;

namespace {

Partition P(std::vector<Block> blocks) { return Partition::from_blocks(std::move(blocks)); }

const Word kExampleWord = parse_word("11**1*1**1");
const Partition kExamplePartition = P({{1, 8}, {2, 3}, {4, 7}, {5, 6}, {9, 10}});

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("Partition construction")
{
    CHECK(P({{3, 4}, {2, 1}}).blocks() == std::vector<Block>{{1, 2}, {3, 4}});
    CHECK(P({{1, 4}, {2, 3}}).str() == "{1,4}{2,3}");
    CHECK(Partition().str() == "{}");
    CHECK_THROWS_AS(Partition({{1, 2}}, 3), InvalidPartition);
    CHECK_THROWS_AS(Partition({{1, 2}, {2, 3}}, 3), InvalidPartition);
    CHECK_THROWS_AS(Partition({{}, {1}}, 1), InvalidPartition);
    CHECK_THROWS_AS(Partition({{0, 1}}, 2), InvalidPartition);
    CHECK(P({{1, 3}, {2, 4}}).block_index_of(4) == 1);
    CHECK(P({{1, 3}, {2, 4}}).is_pair_partition());
    CHECK_FALSE(P({{1, 2, 3}}).is_pair_partition());
}

TEST_CASE("is_noncrossing")
{
    CHECK(is_noncrossing(P({{1, 2}, {3, 4}})));
    CHECK_FALSE(is_noncrossing(P({{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(kExamplePartition));
    CHECK(is_noncrossing(Partition()));
    CHECK_FALSE(is_noncrossing(P({{1, 4}, {2, 5}, {3}})));
}

TEST_CASE("is_noncrossing matches the quadruple definition on all set partitions")
{
    for (int k = 0; k <= 7; ++k)
        for (const auto& blocks : oracle::all_set_partitions(k))
            CHECK(is_noncrossing(Partition(blocks, k)) ==
                  oracle::noncrossing_by_quadruples(blocks, k));
}

TEST_CASE("enumerate_nc")
{
    CHECK(enumerate_nc(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_nc(3).size() == 5);
    // 15 set partitions of {1..4}; only {1,3}{2,4} crosses
    CHECK(oracle::all_set_partitions(4).size() == 15);
    CHECK(enumerate_nc(4).size() == 14);
    CHECK_THROWS_AS(enumerate_nc(15), CapExceeded);

    for (int k = 0; k <= 8; ++k) {
        const auto nc = enumerate_nc(k);
        CHECK(std::is_sorted(nc.begin(), nc.end()));
        std::set<Partition> expected;
        for (const auto& blocks : oracle::all_set_partitions(k))
            if (oracle::noncrossing_by_quadruples(blocks, k))
                expected.insert(Partition(blocks, k));
        CHECK(as_set(nc) == expected);
        CHECK(nc.size() == expected.size());
    }
}

TEST_CASE("enumerate_nc2")
{
    CHECK(enumerate_nc2(2) == std::vector<Partition>{P({{1, 2}})});
    CHECK(enumerate_nc2(4) == std::vector<Partition>{P({{1, 2}, {3, 4}}), P({{1, 4}, {2, 3}})});
    CHECK(enumerate_nc2(3).empty());
    for (int m = 0; m <= 6; ++m)
        CHECK(BigInt(enumerate_nc2(2 * m).size()) == catalan(m));
}

TEST_CASE("enumerate_anc")
{
    CHECK(enumerate_anc(parse_word("1*")) == std::vector<Partition>{P({{1, 2}})});
    CHECK(enumerate_anc(parse_word("11")).empty());

    const auto anc = enumerate_anc(parse_word("1*1*"));
    CHECK(as_set(anc) ==
          std::set<Partition>{P({{1, 2}, {3, 4}}), P({{1, 4}, {2, 3}}), P({{1, 2, 3, 4}})});
    // canonical lexicographic order
    CHECK(anc == std::vector<Partition>{P({{1, 2}, {3, 4}}), P({{1, 2, 3, 4}}),
                                         P({{1, 4}, {2, 3}})});
}

TEST_CASE("enumerate_anc2")
{
    CHECK(enumerate_anc2(parse_word("1*1*")) ==
          std::vector<Partition>{P({{1, 2}, {3, 4}}), P({{1, 4}, {2, 3}})});
    CHECK(enumerate_anc2(parse_word("1**1")) == std::vector<Partition>{P({{1, 2}, {3, 4}})});
    CHECK(enumerate_anc2(parse_word("")) == std::vector<Partition>{Partition()});
}

TEST_CASE("ANC enumeration agrees with filtering NC")
{
    for (const auto& w : all_words_up_to(8)) {
        const int k = static_cast<int>(w.size());
        std::vector<Partition> filtered, filtered2;
        for (const auto& p : enumerate_nc(k)) {
            if (!is_alternating_wrt(p, w))
                continue;
            filtered.push_back(p);
            if (p.is_pair_partition())
                filtered2.push_back(p);
        }
        CHECK(enumerate_anc(w) == filtered);
        CHECK(enumerate_anc2(w) == filtered2);
        if (is_balanced(w))
            CHECK_FALSE(filtered2.empty());
        else
            CHECK(filtered2.empty());
    }
}

TEST_CASE("catalan")
{
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    const auto rec = oracle::catalan_by_recurrence(30);
    for (int m = 0; m <= 30; ++m)
        CHECK(catalan(m) == BigInt(rec[m]));
}

TEST_CASE("bad_pairs")
{
    CHECK(bad_pairs(kExamplePartition, kExampleWord) == std::vector<BadPair>{{1, 4}, {4, 5}});
    CHECK(bad_pairs(P({{1, 2}, {3, 4}}), parse_word("1*1*")).empty());
    // {2,3} sits directly inside {1,4} and opens with the other letter
    CHECK(bad_pairs(P({{1, 4}, {2, 3}}), parse_word("1*1*")) == std::vector<BadPair>{{1, 2}});

    CHECK_THROWS_AS(bad_pairs(P({{1, 2}}), parse_word("1*1*")), GroundSizeMismatch);
    CHECK_THROWS_AS(bad_pairs(P({{1, 2, 3, 4}}), parse_word("1*1*")), NotPairPartition);
    CHECK_THROWS_AS(bad_pairs(P({{1, 3}, {2, 4}}), parse_word("11**")), InvalidPartition);
    CHECK_THROWS_AS(bad_pairs(P({{1, 4}, {2, 3}}), parse_word("1**1")), NotAlternating);
}

TEST_CASE("bad_blocks")
{
    CHECK(bad_blocks(kExamplePartition, kExampleWord) == std::vector<Block>{{4, 7}, {5, 6}});
    CHECK(bad_blocks(P({{1, 2}, {3, 4}}), parse_word("1*1*")).empty());
    CHECK(bad_blocks(P({{1, 2}, {3, 4}}), parse_word("1**1")).empty());
    CHECK_THROWS_AS(bad_blocks(P({{1, 4}, {2, 3}}), parse_word("1**1")), NotAlternating);
}

TEST_CASE("skeleton")
{
    CHECK(skeleton(parse_word(""), {}, 2) == Partition());
    CHECK(skeleton(kExampleWord, {1, 2, 2, 3, 1, 1, 3, 1, 2, 2}, 3) == kExamplePartition);
    CHECK(skeleton(parse_word("1*1*"), {1, 1, 2, 2}, 2) == P({{1, 2}, {3, 4}}));
    CHECK(skeleton(parse_word("1*1*"), {1, 2, 2, 1}, 2) == P({{1, 4}, {2, 3}}));
    CHECK_THROWS_AS(skeleton(parse_word("1*"), {1, 2}, 2), NotAClosedPath);
    CHECK_THROWS_AS(skeleton(parse_word("1*"), {1}, 2), NotAClosedPath);
}

TEST_CASE("preimage_size")
{
    CHECK(preimage_size(kExamplePartition, kExampleWord, 2) == 8);
    for (int d = 1; d <= 5; ++d)
        CHECK(preimage_size(P({{1, 2}}), parse_word("1*"), d) == d);
    CHECK(preimage_size(P({{1, 2}, {3, 4}}), parse_word("1*1*"), 3) == 9);
    CHECK(preimage_size(P({{1, 4}, {2, 3}}), parse_word("1*1*"), 1) == 0);
}

TEST_CASE("enumerate_preimage")
{
    CHECK(enumerate_preimage(P({{1, 2}}), parse_word("1*"), 2) ==
          std::vector<Path>{{1, 1}, {2, 2}});
    CHECK(enumerate_preimage(P({{1, 4}, {2, 3}}), parse_word("1*1*"), 2) ==
          std::vector<Path>{{1, 2, 2, 1}, {2, 1, 1, 2}});
    CHECK(BigInt(enumerate_preimage(kExamplePartition, kExampleWord, 2).size()) ==
          preimage_size(kExamplePartition, kExampleWord, 2));
}

TEST_CASE("skeleton fibers partition the closed paths")
{
    for (const auto& w : all_words_up_to(8)) {
        if (!is_balanced(w))
            continue;
        for (int d : {1, 2, 3}) {
            std::map<Partition, std::vector<Path>> fibers;
            for (const auto& path : enumerate_wpaths(w, d))
                fibers[skeleton(w, path, d)].push_back(path);
            for (const auto& p : enumerate_anc2(w)) {
                const auto fiber = enumerate_preimage(p, w, d);
                CHECK(BigInt(fiber.size()) == preimage_size(p, w, d));
                const auto it = fibers.find(p);
                if (fiber.empty()) {
                    CHECK(it == fibers.end());
                } else {
                    REQUIRE(it != fibers.end());
                    CHECK(it->second == fiber);
                    fibers.erase(it);
                }
            }
            CHECK(fibers.empty());
        }
    }
}

TEST_CASE("preimage_size is non-decreasing in d")
{
    for (const auto& w : all_words_up_to(8))
        for (const auto& p : enumerate_anc2(w))
            for (int d = 1; d < 6; ++d)
                CHECK(preimage_size(p, w, d) <= preimage_size(p, w, d + 1));
}

TEST_CASE("gamma_merge")
{
    const std::vector<BadPair> one{{4, 5}};
    CHECK(gamma_merge(kExamplePartition, kExampleWord, one) ==
          P({{1, 8}, {2, 3}, {4, 5, 6, 7}, {9, 10}}));
    const std::vector<BadPair> both{{1, 4}, {4, 5}};
    CHECK(gamma_merge(kExamplePartition, kExampleWord, both) ==
          P({{1, 4, 5, 6, 7, 8}, {2, 3}, {9, 10}}));
    CHECK(gamma_merge(kExamplePartition, kExampleWord, {}) == kExamplePartition);

    const std::vector<BadPair> not_bad{{1, 2}};
    CHECK_THROWS_AS(gamma_merge(kExamplePartition, kExampleWord, not_bad), PairNotBad);
}

TEST_CASE("merging bad pairs stays in ANC and coarsens")
{
    for (const auto& w : all_words_up_to(8)) {
        for (const auto& p : enumerate_anc2(w)) {
            const auto pairs = bad_pairs(p, w);
            for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
                std::vector<BadPair> chosen;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1u)
                        chosen.push_back(pairs[i]);
                const auto merged = gamma_merge(p, w, chosen);
                CHECK(is_refinement(p, merged));
                CHECK(is_noncrossing(merged));
                CHECK(is_alternating_wrt(merged, w));
                CHECK(merged.size() == p.size() - chosen.size());
            }
        }
    }
}

TEST_CASE("is_refinement")
{
    CHECK(is_refinement(kExamplePartition, kExamplePartition));
    CHECK(is_refinement(P({{1, 2}, {3, 4}}), P({{1, 2, 3, 4}})));
    CHECK_FALSE(is_refinement(P({{1, 4}, {2, 3}}), P({{1, 2}, {3, 4}})));
    CHECK_THROWS_AS(is_refinement(P({{1, 2}}), P({{1, 2, 3}})), GroundSizeMismatch);
}

#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/partitions.hpp"
#include "starmoments/words.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace starmoments {

/// For every pi in ANC_2(w) and every subset A of its bad pairs, tallies
/// gamma_merge(pi, A). Keys are the coarsenings reached.
std::map<Partition, std::uint64_t> merge_preimage_counts(const Word& w);

/// Checks that merge_preimage_counts(w) is supported on ANC(w) and equals
/// prod_{V} C_{|V|/2-1} there. On failure, `why` describes the first mismatch.
bool refinement_identity_holds(const Word& w, std::string* why = nullptr);

/// Groups the brute-force closed w-paths by skeleton and compares every
/// group with enumerate_preimage and preimage_size over ANC_2(w).
bool fiber_decomposition_holds(const Word& w, int d, std::string* why = nullptr);

struct CheckTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures; ///< first few failure messages
};

struct SweepReport {
    int max_len = 0;
    std::vector<int> degrees;
    std::vector<CheckTally> checks;

    bool ok() const;
};

/// Runs every cross-oracle identity over all words of length <= max_len:
/// four-way moment agreement, skeleton fibers, the refinement-count
/// identity and the Catalan counts. Requires max_len <= 10.
SweepReport verify_sweep(int max_len, std::span<const int> degrees);

} // namespace starmoments

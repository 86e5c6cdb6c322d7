#include "starmoments/verify.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/freegroup.hpp"
#include "starmoments/moments.hpp"

#include <algorithm>
#include <set>

namespace starmoments {

std::map<Partition, std::uint64_t> merge_preimage_counts(const Word& w)
{
    std::map<Partition, std::uint64_t> tally;
    for (const auto& pi : enumerate_anc2(w)) {
        const auto pairs = bad_pairs(pi, w);
        const std::size_t subsets = std::size_t{1} << pairs.size();
        std::vector<BadPair> chosen;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            chosen.clear();
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    chosen.push_back(pairs[i]);
            ++tally[gamma_merge(pi, w, chosen)];
        }
    }
    return tally;
}

bool refinement_identity_holds(const Word& w, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = w.str() + ": " + msg;
        return false;
    };
    auto tally = merge_preimage_counts(w);
    for (const auto& coarse : enumerate_anc(w)) {
        BigInt expected = 1;
        for (const auto& b : coarse.blocks())
            expected *= catalan(static_cast<int>(b.size() / 2) - 1);
        const auto it = tally.find(coarse);
        const std::uint64_t got = it == tally.end() ? 0 : it->second;
        if (expected != got)
            return fail(coarse.str() + " reached " + std::to_string(got) + " times, expected " +
                        expected.str());
        if (it != tally.end())
            tally.erase(it);
    }
    if (!tally.empty())
        return fail("merge produced " + tally.begin()->first.str() + " outside ANC(w)");
    return true;
}

bool fiber_decomposition_holds(const Word& w, int d, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = w.str() + " d=" + std::to_string(d) + ": " + msg;
        return false;
    };
    std::map<Partition, std::vector<Path>> fibers;
    for (const auto& p : enumerate_wpaths(w, d))
        fibers[skeleton(w, p, d)].push_back(p);

    for (const auto& pi : enumerate_anc2(w)) {
        const auto expected = enumerate_preimage(pi, w, d);
        const auto size = preimage_size(pi, w, d);
        if (size != expected.size())
            return fail(pi.str() + " preimage_size " + size.str() + " but enumerated " +
                        std::to_string(expected.size()));
        const auto it = fibers.find(pi);
        const std::vector<Path> observed = it == fibers.end() ? std::vector<Path>{} : it->second;
        if (observed != expected)
            return fail("fiber of " + pi.str() + " has " + std::to_string(observed.size()) +
                        " paths, expected " + std::to_string(expected.size()));
        if (it != fibers.end())
            fibers.erase(it);
    }
    if (!fibers.empty())
        return fail("skeleton " + fibers.begin()->first.str() + " outside ANC_2(w)");
    return true;
}

bool SweepReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckTally& c) { return c.failed == 0; });
}

namespace {

void record(CheckTally& tally, bool passed, const std::string& message)
{
    if (passed) {
        ++tally.passed;
        return;
    }
    ++tally.failed;
    if (tally.failures.size() < 10)
        tally.failures.push_back(message);
}

} // namespace

SweepReport verify_sweep(int max_len, std::span<const int> degrees)
{
    if (max_len < 0 || max_len > 10)
        throw InvalidArgument("verify sweep needs 0 <= max_len <= 10");
    for (int d : degrees)
        check_path_budget(static_cast<std::size_t>(max_len), d);

    SweepReport report;
    report.max_len = max_len;
    report.degrees.assign(degrees.begin(), degrees.end());
    CheckTally moments{"moments four ways", 0, 0, {}};
    CheckTally fibers{"skeleton fibers", 0, 0, {}};
    CheckTally refinement{"refinement-count identity", 0, 0, {}};
    CheckTally catalan_counts{"catalan counts", 0, 0, {}};

    const auto words = all_words_up_to(static_cast<std::size_t>(max_len));
    for (const auto& w : words) {
        for (int d : degrees) {
            const auto r = verify_equivalence(w, d);
            record(moments, r.match,
                   w.str() + " d=" + std::to_string(d) + ": brute " + r.brute.str() + ", anc2 " +
                       r.anc2.str() + ", formula " + r.formula.str() + ", cumulant " +
                       r.cumulant.str());
            std::string why;
            const bool ok = fiber_decomposition_holds(w, d, &why);
            record(fibers, ok, why);
        }
        std::string why;
        const bool ok = refinement_identity_holds(w, &why);
        record(refinement, ok, why);
    }
    for (int k = 0; k <= max_len; ++k) {
        const auto nc = enumerate_nc(k).size();
        record(catalan_counts, catalan(k) == nc,
               "|NC(" + std::to_string(k) + ")| = " + std::to_string(nc));
        if (k % 2 == 0) {
            const auto nc2 = enumerate_nc2(k).size();
            record(catalan_counts, catalan(k / 2) == nc2,
                   "|NC2(" + std::to_string(k) + ")| = " + std::to_string(nc2));
        }
    }
    report.checks = {moments, fibers, refinement, catalan_counts};
    return report;
}

} // namespace starmoments

#include "starmoments/moments.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/freegroup.hpp"
#include "starmoments/freeprob.hpp"
#include "starmoments/partitions.hpp"

#include <vector>

namespace starmoments {

namespace {

void check_formula_input(const Word& w, int d)
{
    if (d < 1)
        throw InvalidArgument("degree must be at least 1");
    if (w.size() > kFormulaMaxLength)
        throw CapExceeded("word length " + std::to_string(w.size()) + " exceeds " +
                          std::to_string(kFormulaMaxLength));
}

} // namespace

BigInt star_moment_formula(const Word& w, int d)
{
    check_formula_input(w, d);
    const std::size_t half = w.size() / 2;

    // signed Catalan weight per block size, and powers of d per block count
    std::vector<BigInt> weight(half + 1), power(half + 1);
    for (std::size_t m = 1; m <= half; ++m) {
        weight[m] = catalan(static_cast<int>(m) - 1);
        if (m % 2 == 0)
            weight[m] = -weight[m];
    }
    power[0] = 1;
    for (std::size_t i = 1; i <= half; ++i)
        power[i] = power[i - 1] * d;

    BigInt total = 0;
    for_each_noncrossing(static_cast<int>(w.size()), BlockRule{&w, 0},
                         [&](std::span<const Block> blocks) {
                             BigInt term = power[blocks.size()];
                             for (const auto& b : blocks)
                                 term *= weight[b.size() / 2];
                             total += term;
                         });
    return total;
}

BigInt star_moment_anc2(const Word& w, int d)
{
    check_formula_input(w, d);
    BigInt total = 0;
    const int k = static_cast<int>(w.size());
    for_each_noncrossing(k, BlockRule{&w, 2}, [&](std::span<const Block> blocks) {
        total += preimage_size(Partition(std::vector<Block>(blocks.begin(), blocks.end()), k), w, d);
    });
    return total;
}

EquivalenceReport verify_equivalence(const Word& w, int d)
{
    EquivalenceReport r;
    r.word = w;
    r.degree = d;
    r.brute = count_wpaths(w, d);
    r.anc2 = star_moment_anc2(w, d);
    r.formula = star_moment_formula(w, d);
    r.cumulant = moment_via_cumulants(w, d);
    r.match = r.brute == r.anc2 && r.anc2 == r.formula && r.formula == r.cumulant;
    return r;
}

} // namespace starmoments

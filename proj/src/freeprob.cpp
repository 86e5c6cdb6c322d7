#include "starmoments/freeprob.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/partitions.hpp"

namespace starmoments {

BigInt free_cumulant_ad(const Word& w, int d)
{
    if (d < 1)
        throw InvalidArgument("degree must be at least 1");
    if (!is_alternating(w))
        return 0;
    const int p = static_cast<int>(w.size() / 2);
    BigInt c = d * catalan(p - 1);
    return p % 2 == 1 ? c : BigInt(-c);
}

CumulantTable::CumulantTable(int degree) : degree_(degree)
{
    if (degree < 1)
        throw InvalidArgument("degree must be at least 1");
}

const BigInt& CumulantTable::operator()(const Word& w)
{
    auto it = cache_.find(w);
    if (it == cache_.end())
        it = cache_.emplace(w, free_cumulant_ad(w, degree_)).first;
    return it->second;
}

BigInt moment_via_cumulants(const Word& w, int d)
{
    const int k = static_cast<int>(w.size());
    if (k > kNoncrossingCap)
        throw CapExceeded("word length " + std::to_string(k) + " exceeds the NC cap " +
                          std::to_string(kNoncrossingCap));
    CumulantTable kappa(d);
    BigInt total = 0;
    for_each_noncrossing(k, BlockRule{}, [&](std::span<const Block> blocks) {
        BigInt term = 1;
        for (const auto& b : blocks) {
            const BigInt& c = kappa(subword(w, b));
            if (c == 0)
                return;
            term *= c;
        }
        total += term;
    });
    return total;
}

} // namespace starmoments

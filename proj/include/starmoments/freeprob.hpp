#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/words.hpp"

#include <unordered_map>

namespace starmoments {

/// Free cumulant kappa_l(a^{w_1}, ..., a^{w_l}) of a = u_1 + ... + u_d, a sum
/// of d free Haar unitaries: d (-1)^{p-1} C_{p-1} if w is (1*)^p or (*1)^p,
/// and 0 otherwise.
BigInt free_cumulant_ad(const Word& w, int d);

/// Memoized cumulant lookup keyed by the block subword.
class CumulantTable {
public:
    explicit CumulantTable(int degree);

    int degree() const noexcept { return degree_; }
    const BigInt& operator()(const Word& w);

private:
    int degree_;
    std::unordered_map<Word, BigInt> cache_;
};

/// phi(a^{w_1} ... a^{w_k}) through the moment-cumulant formula, summing over
/// all of NC(k). Throws CapExceeded when |w| exceeds the NC enumeration cap.
BigInt moment_via_cumulants(const Word& w, int d);

} // namespace starmoments

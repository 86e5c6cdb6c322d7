#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/words.hpp"

#include <cstdint>
#include <string>

namespace starmoments {

/// Longest word accepted by the partition-sum evaluators.
constexpr std::size_t kFormulaMaxLength = 20;

/// M(w) via the signed Catalan sum over ANC(w):
///   sum_{pi in ANC(w)} prod_{V in pi} (-1)^{|V|/2-1} C_{|V|/2-1} * d^{|pi|}.
BigInt star_moment_formula(const Word& w, int d);

/// M(w) via the skeleton fibers: sum over ANC_2(w) of prod (d - [V bad]).
BigInt star_moment_anc2(const Word& w, int d);

struct EquivalenceReport {
    Word word;
    int degree = 0;
    BigInt brute;     ///< count_wpaths
    BigInt anc2;      ///< star_moment_anc2
    BigInt formula;   ///< star_moment_formula
    BigInt cumulant;  ///< moment_via_cumulants
    bool match = false;
};

/// Evaluates M(w) four ways and flags disagreement. Brute force must be
/// within the path cap (throws CapExceeded otherwise).
EquivalenceReport verify_equivalence(const Word& w, int d);

} // namespace starmoments

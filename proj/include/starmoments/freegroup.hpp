#pragma once

#include "starmoments/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace starmoments {

/// Generator choices (i_1, ..., i_k), each in 1..d.
using Path = std::vector<int>;

constexpr int kMaxDegree = 64;
/// Upper bound on d^|w| for brute-force enumeration.
constexpr std::uint64_t kPathCap = 100'000'000;

/// One factor e_generator^exponent of a reduced word in F_d.
struct Factor {
    int generator = 1;
    int exponent = 1; // +1 or -1

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Reduced word in the free group F_d; the empty word is the identity,
/// i.e. the root of the directed tree.
class GroupElement {
public:
    GroupElement() = default;

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t length() const noexcept { return factors_.size(); }
    bool is_identity() const noexcept { return factors_.empty(); }

    /// e.g. "e1 e2^-1"; the identity prints as "1".
    std::string str() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    friend GroupElement multiply_generator(const GroupElement&, int, Letter);
    std::vector<Factor> factors_;
};

/// Reduced product g * e_index^{+1} (ONE) or g * e_index^{-1} (STAR).
GroupElement multiply_generator(const GroupElement& g, int index, Letter exponent);

inline bool is_identity(const GroupElement& g) { return g.is_identity(); }

/// Running products v_0 = 1, v_j = e_{i_1}^{w_1} ... e_{i_j}^{w_j}.
/// Throws InvalidArgument if the path and word lengths differ.
std::vector<GroupElement> prefix_products(const Word& w, const Path& path);

/// True iff the path has the word's length and its product is the identity.
bool is_closed_path(const Word& w, const Path& path, int d);

/// Throws InvalidArgument unless 1 <= d <= kMaxDegree, and CapExceeded
/// unless d^length <= kPathCap.
void check_path_budget(std::size_t length, int d);

/// All closed w-paths at the root, in lexicographic order.
std::vector<Path> enumerate_wpaths(const Word& w, int d);

/// Number of closed w-paths at the root: the star moment M(w) by brute force.
std::uint64_t count_wpaths(const Word& w, int d);

std::string format_path(const Path& path);

} // namespace starmoments

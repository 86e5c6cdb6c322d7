#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starmoments {

/// A letter of the alphabet {1, *}: ONE stands for the adjacency matrix,
/// STAR for its adjoint (equivalently, a generator and its inverse).
enum class Letter : unsigned char { One, Star };

constexpr Letter flip(Letter l) noexcept
{
    return l == Letter::One ? Letter::Star : Letter::One;
}

constexpr char to_char(Letter l) noexcept { return l == Letter::One ? '1' : '*'; }

/// Immutable word over {1, *}. Ordered and hashable so it can key maps.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 0-based access.
    Letter operator[](std::size_t i) const { return letters_[i]; }
    /// 1-based access, matching partition indices.
    Letter at_position(std::size_t pos) const;

    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    std::size_t count(Letter l) const noexcept;

    /// Canonical text form using '1' and '*'.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Parses '1' and '*' ('s' is accepted as an alias for '*').
/// Throws InvalidCharacter with the 1-based position of the first bad char.
Word parse_word(std::string_view text);

/// True iff the word has as many ONE letters as STAR letters.
///
/// This is exactly the class generated by B -> eps | 1 B * B | * B 1 B,
/// i.e. the words admitting a closed path in the directed tree. It contains
/// every concatenation of "1*" and "*1" blocks, but also nested words like
/// "11**".
bool is_balanced(const Word& w);

/// True iff w is (1*)^p or (*1)^p with p >= 1. The empty word is not alternating.
bool is_alternating(const Word& w);

/// Letters at the given strictly increasing 1-based positions.
Word subword(const Word& w, std::span<const int> positions);

/// Cyclic rotation by `shift` letters to the left.
Word rotate(const Word& w, std::size_t shift);

/// Swaps ONE and STAR letterwise.
Word star_flip(const Word& w);

/// All 2^k words of length k, in lexicographic order with '1' < '*'.
std::vector<Word> all_words(std::size_t k);

/// All words of length 0..max_len, grouped by length.
std::vector<Word> all_words_up_to(std::size_t max_len);

} // namespace starmoments

template <>
struct std::hash<starmoments::Word> {
    std::size_t operator()(const starmoments::Word& w) const noexcept
    {
        std::size_t h = w.size();
        for (auto l : w)
            h = h * 1315423911u + static_cast<std::size_t>(l) + 1;
        return h;
    }
};

#include "starmoments/words.hpp"

#include "starmoments/errors.hpp"

#include <algorithm>
#include <ostream>

namespace starmoments {

Letter Word::at_position(std::size_t pos) const
{
    if (pos < 1 || pos > letters_.size())
        throw IndexOutOfRange("word position " + std::to_string(pos) +
                              " outside 1.." + std::to_string(letters_.size()));
    return letters_[pos - 1];
}

std::size_t Word::count(Letter l) const noexcept
{
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

std::string Word::str() const
{
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_)
        s.push_back(to_char(l));
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word parse_word(std::string_view text)
{
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '1':
            letters.push_back(Letter::One);
            break;
        case '*':
        case 's':
            letters.push_back(Letter::Star);
            break;
        default:
            throw InvalidCharacter(i + 1, text[i]);
        }
    }
    return Word(std::move(letters));
}

bool is_balanced(const Word& w)
{
    return w.count(Letter::One) == w.count(Letter::Star);
}

bool is_alternating(const Word& w)
{
    if (w.empty() || w.size() % 2 != 0)
        return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1])
            return false;
    return true;
}

Word subword(const Word& w, std::span<const int> positions)
{
    std::vector<Letter> out;
    out.reserve(positions.size());
    int prev = 0;
    for (int p : positions) {
        if (p <= prev)
            throw IndexOutOfRange("subword positions must be strictly increasing and >= 1");
        out.push_back(w.at_position(static_cast<std::size_t>(p)));
        prev = p;
    }
    return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t shift)
{
    if (w.empty())
        return w;
    std::vector<Letter> out(w.begin(), w.end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
    return Word(std::move(out));
}

Word star_flip(const Word& w)
{
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto l : w)
        out.push_back(flip(l));
    return Word(std::move(out));
}

std::vector<Word> all_words(std::size_t k)
{
    std::vector<Word> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Letter> letters(k);
        // most significant bit first so that the order is lexicographic
        for (std::size_t i = 0; i < k; ++i)
            letters[i] = (mask >> (k - 1 - i)) & 1 ? Letter::Star : Letter::One;
        out.emplace_back(std::move(letters));
    }
    return out;
}

std::vector<Word> all_words_up_to(std::size_t max_len)
{
    std::vector<Word> out;
    for (std::size_t k = 0; k <= max_len; ++k) {
        auto words = all_words(k);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

} // namespace starmoments

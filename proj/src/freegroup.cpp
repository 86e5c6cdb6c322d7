#include "starmoments/freegroup.hpp"

#include "starmoments/errors.hpp"

#include <functional>

namespace starmoments {

std::string GroupElement::str() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty())
            s += ' ';
        s += 'e' + std::to_string(f.generator);
        if (f.exponent < 0)
            s += "^-1";
    }
    return s;
}

GroupElement multiply_generator(const GroupElement& g, int index, Letter exponent)
{
    GroupElement out = g;
    const int e = exponent == Letter::One ? 1 : -1;
    auto& fs = out.factors_;
    if (!fs.empty() && fs.back().generator == index && fs.back().exponent == -e)
        fs.pop_back();
    else
        fs.push_back({index, e});
    return out;
}

std::vector<GroupElement> prefix_products(const Word& w, const Path& path)
{
    if (path.size() != w.size())
        throw InvalidArgument("path length " + std::to_string(path.size()) +
                              " differs from word length " + std::to_string(w.size()));
    std::vector<GroupElement> out;
    out.reserve(w.size() + 1);
    out.emplace_back();
    for (std::size_t j = 0; j < w.size(); ++j)
        out.push_back(multiply_generator(out.back(), path[j], w[j]));
    return out;
}

bool is_closed_path(const Word& w, const Path& path, int d)
{
    if (path.size() != w.size())
        return false;
    for (int i : path)
        if (i < 1 || i > d)
            return false;
    return prefix_products(w, path).back().is_identity();
}

void check_path_budget(std::size_t length, int d)
{
    if (d < 1 || d > kMaxDegree)
        throw InvalidArgument("degree must be in 1.." + std::to_string(kMaxDegree));
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < length; ++j) {
        total *= static_cast<std::uint64_t>(d);
        if (total > kPathCap)
            throw CapExceeded("d^|w| = " + std::to_string(d) + "^" + std::to_string(length) +
                              " exceeds the enumeration cap " + std::to_string(kPathCap));
    }
}

namespace {

// Depth-first search over prefixes sharing one reduced-factor stack. A prefix
// whose reduced length exceeds the remaining steps can never close.
class PathSearch {
public:
    PathSearch(const Word& w, int d, std::function<void(const Path&)> on_closed)
      : word_(w), degree_(d), on_closed_(std::move(on_closed))
    {
        path_.reserve(w.size());
        stack_.reserve(w.size());
    }

    void run() { step(0); }

private:
    void step(std::size_t j)
    {
        if (stack_.size() > word_.size() - j)
            return;
        if (j == word_.size()) {
            on_closed_(path_);
            return;
        }
        const int e = word_[j] == Letter::One ? 1 : -1;
        for (int i = 1; i <= degree_; ++i) {
            path_.push_back(i);
            if (!stack_.empty() && stack_.back().generator == i && stack_.back().exponent == -e) {
                const Factor saved = stack_.back();
                stack_.pop_back();
                step(j + 1);
                stack_.push_back(saved);
            } else {
                stack_.push_back({i, e});
                step(j + 1);
                stack_.pop_back();
            }
            path_.pop_back();
        }
    }

    const Word& word_;
    int degree_;
    std::function<void(const Path&)> on_closed_;
    Path path_;
    std::vector<Factor> stack_;
};

} // namespace

std::vector<Path> enumerate_wpaths(const Word& w, int d)
{
    check_path_budget(w.size(), d);
    std::vector<Path> out;
    PathSearch(w, d, [&](const Path& p) { out.push_back(p); }).run();
    return out;
}

std::uint64_t count_wpaths(const Word& w, int d)
{
    check_path_budget(w.size(), d);
    std::uint64_t n = 0;
    PathSearch(w, d, [&](const Path&) { ++n; }).run();
    return n;
}

std::string format_path(const Path& path)
{
    std::string s;
    for (std::size_t j = 0; j < path.size(); ++j) {
        if (j)
            s += ',';
        s += std::to_string(path[j]);
    }
    return s;
}

} // namespace starmoments

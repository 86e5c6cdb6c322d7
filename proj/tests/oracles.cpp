#include "oracles.hpp"

#include <functional>
#include <set>

namespace oracle {

std::vector<std::vector<Block>> all_set_partitions(int k)
{
    std::vector<std::vector<Block>> out;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int max_label) {
        if (i == k) {
            std::vector<Block> blocks(static_cast<std::size_t>(max_label + 1));
            for (int x = 0; x < k; ++x)
                blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
            out.push_back(blocks);
            return;
        }
        for (int label = 0; label <= max_label + 1; ++label) {
            rgs[static_cast<std::size_t>(i)] = label;
            rec(i + 1, std::max(max_label, label));
        }
    };
    if (k == 0)
        out.push_back({});
    else
        rec(0, -1);
    return out;
}

bool noncrossing_by_quadruples(const std::vector<Block>& blocks, int k)
{
    std::vector<int> label(static_cast<std::size_t>(k) + 1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b])
            label[static_cast<std::size_t>(x)] = static_cast<int>(b);
    auto l = [&](int x) { return label[static_cast<std::size_t>(x)]; };
    for (int i1 = 1; i1 <= k; ++i1)
        for (int i2 = i1 + 1; i2 <= k; ++i2)
            for (int j1 = i2 + 1; j1 <= k; ++j1)
                for (int j2 = j1 + 1; j2 <= k; ++j2)
                    if (l(i1) == l(j1) && l(i2) == l(j2) && l(i1) != l(i2))
                        return false;
    return true;
}

std::uint64_t closed_tuples(const Word& w, int d)
{
    const std::size_t k = w.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= static_cast<std::uint64_t>(d);
    std::uint64_t closed = 0;
    std::vector<int> tuple(k);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            tuple[k - 1 - i] = static_cast<int>(c % static_cast<std::uint64_t>(d)) + 1;
            c /= static_cast<std::uint64_t>(d);
        }
        // write the product as signed generator labels and cancel repeatedly
        std::vector<int> letters;
        for (std::size_t i = 0; i < k; ++i)
            letters.push_back(w[i] == starmoments::Letter::One ? tuple[i] : -tuple[i]);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
                if (letters[i] == -letters[i + 1]) {
                    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                                  letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                    changed = true;
                    break;
                }
            }
        }
        if (letters.empty())
            ++closed;
    }
    return closed;
}

std::vector<std::uint64_t> catalan_by_recurrence(int up_to)
{
    std::vector<std::uint64_t> c(static_cast<std::size_t>(up_to) + 1, 0);
    c[0] = 1;
    for (int m = 0; m < up_to; ++m)
        for (int i = 0; i <= m; ++i)
            c[static_cast<std::size_t>(m) + 1] +=
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
    return c;
}

std::int64_t dense_trace(const Digraph& g, const Word& w)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    using Matrix = std::vector<std::vector<std::int64_t>>;
    Matrix a(n, std::vector<std::int64_t>(n, 0));
    for (const auto& arc : g.arcs())
        ++a[static_cast<std::size_t>(arc.tail)][static_cast<std::size_t>(arc.head)];
    Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    for (auto letter : w) {
        Matrix next(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (m[i][l] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto entry = letter == starmoments::Letter::One ? a[l][j] : a[j][l];
                    next[i][j] += m[i][l] * entry;
                }
            }
        m = std::move(next);
    }
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i)
        tr += m[i][i];
    return tr;
}

std::uint64_t closed_arc_sequences(const Digraph& g, int j)
{
    const auto m = static_cast<std::uint64_t>(g.arc_count());
    std::uint64_t combos = 1;
    for (int i = 0; i < j; ++i)
        combos *= 2 * m;
    std::uint64_t closed = 0;
    std::vector<int> arc(static_cast<std::size_t>(j));
    std::vector<bool> backward(static_cast<std::size_t>(j));
    for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < arc.size(); ++i) {
            backward[i] = c % 2;
            c /= 2;
            arc[i] = static_cast<int>(c % m);
            c /= m;
        }
        if (std::set<int>(arc.begin(), arc.end()).size() != arc.size())
            continue;
        auto from = [&](std::size_t i) {
            const auto& a = g.arc(arc[i]);
            return backward[i] ? a.head : a.tail;
        };
        auto to = [&](std::size_t i) {
            const auto& a = g.arc(arc[i]);
            return backward[i] ? a.tail : a.head;
        };
        bool ok = true;
        for (std::size_t i = 0; i < arc.size(); ++i)
            if (to(i) != from((i + 1) % arc.size()))
                ok = false;
        if (ok)
            ++closed;
    }
    return closed;
}

std::uint64_t cycle_sum_over_vertex_tuples(const Digraph& g, int j)
{
    const int n = g.vertex_count();
    std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(n),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for (const auto& arc : g.arcs())
        ++a[static_cast<std::size_t>(arc.tail)][static_cast<std::size_t>(arc.head)];
    std::uint64_t total = 0;
    for (const auto& w : starmoments::all_words(static_cast<std::size_t>(j))) {
        std::vector<int> v(static_cast<std::size_t>(j) + 1, 0);
        std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t weight) {
            if (i == j) {
                if (v[static_cast<std::size_t>(j)] != v[0])
                    return;
                std::set<std::pair<int, int>> pairs;
                for (int s = 1; s <= j; ++s) {
                    const int x = v[static_cast<std::size_t>(s) - 1], y = v[static_cast<std::size_t>(s)];
                    pairs.insert(w[static_cast<std::size_t>(s) - 1] == starmoments::Letter::One
                                     ? std::pair{x, y}
                                     : std::pair{y, x});
                }
                if (pairs.size() == static_cast<std::size_t>(j))
                    total += weight;
                return;
            }
            for (int u = 0; u < n; ++u) {
                const int x = v[static_cast<std::size_t>(i)];
                const auto entry = w[static_cast<std::size_t>(i)] == starmoments::Letter::One
                                       ? a[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)]
                                       : a[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)];
                if (entry == 0)
                    continue;
                v[static_cast<std::size_t>(i) + 1] = u;
                rec(i + 1, weight * entry);
            }
        };
        for (int v0 = 0; v0 < n; ++v0) {
            v[0] = v0;
            rec(0, 1);
        }
    }
    return total;
}

} // namespace oracle

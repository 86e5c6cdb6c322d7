#pragma once

// Seeded random inputs for the property tests.

#include "starmoments/digraph.hpp"
#include "starmoments/words.hpp"

#include <random>
#include <utility>
#include <vector>

namespace gen {

/// Multidigraph on n vertices with `arcs` arcs, loops and parallel arcs allowed.
inline starmoments::Digraph multigraph(std::mt19937_64& rng, int n, int arcs)
{
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < arcs; ++i)
        list.emplace_back(vertex(rng), vertex(rng));
    return starmoments::Digraph(n, list);
}

inline starmoments::Digraph small_multigraph(std::mt19937_64& rng, int max_n = 20)
{
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const int arcs = std::uniform_int_distribution<int>(0, 3 * n)(rng);
    return multigraph(rng, n, arcs);
}

/// Simple digraph: each ordered pair i != j present with probability p.
inline starmoments::Digraph simple_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng))
                list.emplace_back(i, j);
    return starmoments::Digraph(n, list);
}

inline starmoments::Word word(std::mt19937_64& rng, std::size_t max_len)
{
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::vector<starmoments::Letter> letters;
    for (std::size_t i = 0; i < len; ++i)
        letters.push_back(rng() % 2 ? starmoments::Letter::One : starmoments::Letter::Star);
    return starmoments::Word(std::move(letters));
}

} // namespace gen

#pragma once

// Independent reference computations used only by the tests. Each one goes
// back to the raw definition and shares no code path with the library
// routine it checks.

#include "starmoments/digraph.hpp"
#include "starmoments/partitions.hpp"
#include "starmoments/words.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using starmoments::Block;
using starmoments::Digraph;
using starmoments::Word;

/// Every set partition of {1..k} as a block list (restricted growth strings).
std::vector<std::vector<Block>> all_set_partitions(int k);

/// Crossing test straight from the definition: no i1 < i2 < j1 < j2 with
/// i1 ~ j1, i2 ~ j2 and i1 !~ i2.
bool noncrossing_by_quadruples(const std::vector<Block>& blocks, int k);

/// Number of tuples in [d]^k whose product e_{i1}^{w1} ... e_{ik}^{wk}
/// freely reduces to the identity, over all d^k tuples.
std::uint64_t closed_tuples(const Word& w, int d);

/// Catalan numbers from C_{m+1} = sum_i C_i C_{m-i}.
std::vector<std::uint64_t> catalan_by_recurrence(int up_to);

/// Tr A^w with dense integer matrices.
std::int64_t dense_trace(const Digraph& g, const Word& w);

/// Closed sequences of j pairwise distinct arcs, each traversed forward or
/// backward, over all arcs^j * 2^j candidates. Divide by 2j for c_j.
std::uint64_t closed_arc_sequences(const Digraph& g, int j);

/// The cycle-count sum summing over words and vertex tuples with the
/// injectivity constraint placed on vertex pairs; agrees with the arc form on
/// simple graphs.
std::uint64_t cycle_sum_over_vertex_tuples(const Digraph& g, int j);

} // namespace oracle

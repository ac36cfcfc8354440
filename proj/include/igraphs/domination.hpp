#pragma once

#include <cstdint>
#include <vector>

#include "igraphs/graph.hpp"

namespace igraphs {

enum class GapMode { linear, circular };

// Run-length decomposition of the non-member vertices of an i-set on a path
// or cycle. For paths there are i(G)+1 entries including the (possibly
// empty) end runs; for cycles entry j is the run following the j-th member
// in index order, wrapping around.
struct GapProfile {
    GapMode mode = GapMode::linear;
    std::vector<int> gaps;
    int total = 0;  // r = sum of gaps = n - i(G)

    // Entries at their lower bound: 0 for path end runs, 1 otherwise.
    int small_count() const;
};

// Minimum cardinality of an independent dominating set, by
// increasing-cardinality backtracking over dominators of the first
// undominated vertex.
std::size_t independent_domination_number(const Graph& g);

// Every independent dominating set of cardinality i(g), each exactly once,
// in lexicographic order of the sorted member lists.
std::vector<VertexSet> enumerate_isets(const Graph& g);

// Independent oracle: full subset scan by increasing cardinality using only
// the is_independent / is_dominating predicates. Exponential; capped at 30
// vertices.
std::uint64_t oracle_count_isets(const Graph& g);

bool is_maximal_independent(const Graph& g, const VertexSet& s);

// True iff s is an i-set of g: independent, dominating, of minimum size.
bool is_iset(const Graph& g, const VertexSet& s);

GapProfile gap_profile(const Graph& g, const VertexSet& s, GapMode mode);

}  // namespace igraphs

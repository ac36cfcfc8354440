#include "igraphs/domination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "igraphs/errors.hpp"

namespace igraphs {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Backtracking enumeration of independent dominating sets of a fixed
// cardinality. Branches over the candidate dominators of the first
// undominated vertex; earlier candidates are banned in later branches so
// every set is produced exactly once.
struct IdomSearch {
    const Graph& g;
    std::uint64_t full;
    std::vector<std::uint64_t> closed;
    int target = 0;
    int max_cover = 1;
    bool stop_first = false;
    bool found_any = false;
    std::vector<std::uint64_t> solutions;

    explicit IdomSearch(const Graph& graph) : g(graph), full(graph.full_mask()) {
        closed.resize(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) {
            closed[v] = g.closed_neighborhood_mask(static_cast<int>(v));
            max_cover = std::max(max_cover, std::popcount(closed[v]));
        }
    }

    void run(int size, bool first_only) {
        target = size;
        stop_first = first_only;
        found_any = false;
        solutions.clear();
        if (g.order() == 0) return;
        descend(0, 0, 0, 0);
    }

    void descend(std::uint64_t chosen, std::uint64_t dominated, std::uint64_t banned, int count) {
        if (dominated == full) {
            if (count == target) {
                solutions.push_back(chosen);
                found_any = true;
            }
            return;
        }
        const int slots = target - count;
        if (slots == 0) return;
        const int undominated = std::popcount(full & ~dominated);
        if (undominated > slots * max_cover) return;
        const int e = std::countr_zero(full & ~dominated);
        std::uint64_t cands = closed[static_cast<std::size_t>(e)] & ~dominated & ~banned;
        std::uint64_t ban = banned;
        while (cands != 0) {
            const int c = std::countr_zero(cands);
            cands &= cands - 1;
            descend(chosen | bit(c), dominated | closed[static_cast<std::size_t>(c)], ban, count + 1);
            if (found_any && stop_first) return;
            ban |= bit(c);
        }
    }
};

void require_small(const Graph& g, const char* op) {
    if (g.order() > VertexSet::max_vertices)
        throw too_large_error(std::string(op) + ": graph exceeds " +
                              std::to_string(VertexSet::max_vertices) + " vertices");
}

}  // namespace

int GapProfile::small_count() const {
    int count = 0;
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        const bool end_run = mode == GapMode::linear && (j == 0 || j + 1 == gaps.size());
        if (gaps[j] == (end_run ? 0 : 1)) ++count;
    }
    return count;
}

std::size_t independent_domination_number(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("independent_domination_number: graph must have at least one vertex");
    require_small(g, "independent_domination_number");
    IdomSearch search(g);
    for (std::size_t size = 1; size <= g.order(); ++size) {
        search.run(static_cast<int>(size), true);
        if (search.found_any) return size;
    }
    throw std::logic_error("independent_domination_number: no maximal independent set found");
}

std::vector<VertexSet> enumerate_isets(const Graph& g) {
    require_small(g, "enumerate_isets");
    const auto i = independent_domination_number(g);
    IdomSearch search(g);
    search.run(static_cast<int>(i), false);
    std::vector<VertexSet> sets;
    sets.reserve(search.solutions.size());
    for (std::uint64_t mask : search.solutions) sets.push_back(VertexSet::from_mask(mask));
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
    return sets;
}

std::uint64_t oracle_count_isets(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("oracle_count_isets: graph must have at least one vertex");
    if (g.order() > 30)
        throw too_large_error("oracle_count_isets: full subset scan is capped at 30 vertices");
    const int n = static_cast<int>(g.order());
    for (int size = 1; size <= n; ++size) {
        std::uint64_t count = 0;
        // Gosper's hack: all masks of the given popcount, ascending.
        std::uint64_t mask = (bit(size)) - 1;
        const std::uint64_t limit = bit(n);
        while (mask < limit) {
            const auto s = VertexSet::from_mask(mask);
            if (is_independent(g, s) && is_dominating(g, s)) ++count;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (count > 0) return count;
    }
    throw std::logic_error("oracle_count_isets: no maximal independent set found");
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) return false;
    // Maximal iff no outside vertex can be added while staying independent.
    const std::uint64_t outside = g.full_mask() & ~s.mask();
    for (std::uint64_t m = outside; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((g.neighborhood_mask(v) & s.mask()) == 0) return false;
    }
    return true;
}

bool is_iset(const Graph& g, const VertexSet& s) {
    if (g.order() == 0 || g.order() > VertexSet::max_vertices) return false;
    if ((s.mask() & ~g.full_mask()) != 0) return false;
    if (!is_independent(g, s) || !is_dominating(g, s)) return false;
    return s.size() == independent_domination_number(g);
}

GapProfile gap_profile(const Graph& g, const VertexSet& s, GapMode mode) {
    const int n = static_cast<int>(g.order());
    if (mode == GapMode::linear) {
        bool ok = n >= 1 && g.edge_count() == static_cast<std::size_t>(n - 1);
        for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(i, i + 1);
        if (!ok) throw std::invalid_argument("gap_profile: linear mode requires a path-structured graph");
    } else {
        bool ok = n >= 3 && g.edge_count() == static_cast<std::size_t>(n);
        for (int i = 0; ok && i < n; ++i) ok = g.adjacent(i, (i + 1) % n);
        if (!ok) throw std::invalid_argument("gap_profile: circular mode requires a cycle-structured graph");
    }
    if (!is_iset(g, s)) throw std::invalid_argument("gap_profile: vertex set is not an i-set of the graph");

    const auto members = s.members();
    GapProfile profile;
    profile.mode = mode;
    if (mode == GapMode::linear) {
        profile.gaps.push_back(members.front());
        for (std::size_t j = 1; j < members.size(); ++j)
            profile.gaps.push_back(members[j] - members[j - 1] - 1);
        profile.gaps.push_back(n - 1 - members.back());
    } else {
        for (std::size_t j = 0; j < members.size(); ++j) {
            const int cur = members[j];
            const int nxt = members[(j + 1) % members.size()];
            profile.gaps.push_back(((nxt - cur - 1) % n + n) % n);
        }
    }
    for (int x : profile.gaps) profile.total += x;
    return profile;
}

}  // namespace igraphs

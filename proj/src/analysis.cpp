#include "igraphs/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "igraphs/domination.hpp"
#include "igraphs/errors.hpp"
#include "igraphs/reconfig.hpp"

namespace igraphs {

namespace {

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

struct BitMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    void init(const Graph& g) {
        n = static_cast<int>(g.order());
        words = (n + 63) / 64;
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) set(u, v);
    }
    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v / 64)] |=
            std::uint64_t{1} << (v % 64);
    }
    bool get(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v / 64)] >>
                (v % 64)) & 1u;
    }
    const std::uint64_t* row(int u) const { return &bits[static_cast<std::size_t>(u) * words]; }
};

int overlap(const std::uint64_t* row, const std::vector<std::uint64_t>& mask) {
    int total = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) total += std::popcount(row[w] & mask[w]);
    return total;
}

// Joint color refinement of both graphs; returns false as soon as the color
// histograms disagree.
bool refine_colors(const Graph& g1, const Graph& g2, std::vector<int>& color1, std::vector<int>& color2) {
    const int n = static_cast<int>(g1.order());
    color1.resize(n);
    color2.resize(n);
    for (int v = 0; v < n; ++v) {
        color1[v] = g1.degree(v);
        color2[v] = g2.degree(v);
    }
    auto histogram_match = [&] {
        std::map<int, int> h1, h2;
        for (int v = 0; v < n; ++v) {
            ++h1[color1[v]];
            ++h2[color2[v]];
        }
        return h1 == h2;
    };
    if (!histogram_match()) return false;
    int classes = 0;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto signature = [](const Graph& g, const std::vector<int>& color, int v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            return std::pair{color[v], std::move(nb)};
        };
        std::vector<int> next1(n), next2(n);
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g1, color1, v);
            auto [it, _] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size()));
            next1[v] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g2, color2, v);
            auto it = ids.find(sig);
            if (it == ids.end()) return false;  // signature unseen in g1
            next2[v] = it->second;
        }
        color1.swap(next1);
        color2.swap(next2);
        if (!histogram_match()) return false;
        const int count = static_cast<int>(ids.size());
        if (count == classes) break;  // stable
        classes = count;
    }
    return true;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    BitMatrix m1, m2;
    std::vector<int> color1, color2;
    std::vector<int> mapping;   // g1 -> g2
    std::vector<int> reverse_;  // g2 -> g1
    std::vector<std::uint64_t> mapped1, mapped2;
    int n;

    IsoSearch(const Graph& a, const Graph& b) : g1(a), g2(b), n(static_cast<int>(a.order())) {
        m1.init(a);
        m2.init(b);
        mapping.assign(n, -1);
        reverse_.assign(n, -1);
        mapped1.assign(static_cast<std::size_t>((n + 63) / 64), 0);
        mapped2.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    }

    int pick_next() const {
        for (int v = 0; v < n; ++v) {
            if (mapping[v] >= 0) continue;
            if (overlap(m1.row(v), mapped1) > 0) return v;
        }
        for (int v = 0; v < n; ++v)
            if (mapping[v] < 0) return v;
        return -1;
    }

    bool feasible(int u, int v) const {
        if (color1[u] != color2[v]) return false;
        if (overlap(m1.row(u), mapped1) != overlap(m2.row(v), mapped2)) return false;
        for (int w : g1.neighbors(u))
            if (mapping[w] >= 0 && !m2.get(v, mapping[w])) return false;
        return true;
    }

    bool search(int depth) {
        if (depth == n) return true;
        const int u = pick_next();
        for (int v = 0; v < n; ++v) {
            if (reverse_[v] >= 0 || !feasible(u, v)) continue;
            mapping[u] = v;
            reverse_[v] = u;
            mapped1[static_cast<std::size_t>(u / 64)] |= std::uint64_t{1} << (u % 64);
            mapped2[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
            if (search(depth + 1)) return true;
            mapping[u] = -1;
            reverse_[v] = -1;
            mapped1[static_cast<std::size_t>(u / 64)] &= ~(std::uint64_t{1} << (u % 64));
            mapped2[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64));
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Hamiltonicity solver: edge in/out branching with forced-edge propagation.
// Degree-two vertices force both incident edges; closing a cycle is only
// allowed when it spans the graph.
// ---------------------------------------------------------------------------

class HamSolver {
public:
    enum class Outcome { found, none, budget };

    HamSolver(const Graph& g, std::uint64_t budget) : budget_(budget) {
        n_ = static_cast<int>(g.order());
        edge_vs_ = g.edges();
        incident_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t e = 0; e < edge_vs_.size(); ++e) {
            incident_[static_cast<std::size_t>(edge_vs_[e].first)].push_back(static_cast<int>(e));
            incident_[static_cast<std::size_t>(edge_vs_[e].second)].push_back(static_cast<int>(e));
        }
        state_.assign(edge_vs_.size(), EState::undecided);
        in_cnt_.assign(static_cast<std::size_t>(n_), 0);
        und_cnt_.assign(static_cast<std::size_t>(n_), 0);
        chain_end_.resize(static_cast<std::size_t>(n_));
        std::iota(chain_end_.begin(), chain_end_.end(), 0);
        for (int v = 0; v < n_; ++v)
            und_cnt_[static_cast<std::size_t>(v)] = static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }

    Outcome solve(std::vector<int>& cycle_out) {
        if (n_ < 3) return Outcome::none;
        for (int v = 0; v < n_; ++v) queue_.push_back(v);
        if (!propagate()) return over_budget_ ? Outcome::budget : Outcome::none;
        const bool ok = dfs();
        if (ok) {
            cycle_out = extract_cycle();
            return Outcome::found;
        }
        return over_budget_ ? Outcome::budget : Outcome::none;
    }

    std::uint64_t steps_used() const { return steps_; }

private:
    enum class EState : std::uint8_t { undecided, in, out };
    struct Undo {
        int eid;
        int eu, ev;          // chain ends whose links were rewritten; -1 for none
        int old_eu, old_ev;  // previous chain_end values
    };

    int n_ = 0;
    std::vector<std::pair<int, int>> edge_vs_;
    std::vector<std::vector<int>> incident_;
    std::vector<EState> state_;
    std::vector<int> in_cnt_, und_cnt_, chain_end_;
    int in_total_ = 0;
    std::uint64_t steps_ = 0;
    std::uint64_t budget_ = 0;
    bool over_budget_ = false;
    std::vector<Undo> trail_;
    std::vector<int> queue_;
    std::vector<int> scratch_;

    bool charge(std::uint64_t amount) {
        steps_ += amount;
        if (steps_ > budget_) {
            over_budget_ = true;
            return false;
        }
        return true;
    }

    bool set_in(int eid) {
        if (!charge(1)) return false;
        auto [u, v] = edge_vs_[static_cast<std::size_t>(eid)];
        if (in_cnt_[static_cast<std::size_t>(u)] >= 2 || in_cnt_[static_cast<std::size_t>(v)] >= 2)
            return false;
        Undo undo{eid, -1, -1, -1, -1};
        if (chain_end_[static_cast<std::size_t>(u)] == v) {
            // u and v are the two ends of one chain; closing is only allowed
            // when the cycle spans every vertex.
            if (in_total_ + 1 != n_) return false;
        } else {
            const int eu = chain_end_[static_cast<std::size_t>(u)];
            const int ev = chain_end_[static_cast<std::size_t>(v)];
            undo = Undo{eid, eu, ev, chain_end_[static_cast<std::size_t>(eu)],
                        chain_end_[static_cast<std::size_t>(ev)]};
            chain_end_[static_cast<std::size_t>(eu)] = ev;
            chain_end_[static_cast<std::size_t>(ev)] = eu;
        }
        state_[static_cast<std::size_t>(eid)] = EState::in;
        ++in_cnt_[static_cast<std::size_t>(u)];
        ++in_cnt_[static_cast<std::size_t>(v)];
        --und_cnt_[static_cast<std::size_t>(u)];
        --und_cnt_[static_cast<std::size_t>(v)];
        ++in_total_;
        trail_.push_back(undo);
        queue_.push_back(u);
        queue_.push_back(v);
        return true;
    }

    bool set_out(int eid) {
        if (!charge(1)) return false;
        auto [u, v] = edge_vs_[static_cast<std::size_t>(eid)];
        state_[static_cast<std::size_t>(eid)] = EState::out;
        --und_cnt_[static_cast<std::size_t>(u)];
        --und_cnt_[static_cast<std::size_t>(v)];
        trail_.push_back(Undo{eid, -1, -1, -1, -1});
        queue_.push_back(u);
        queue_.push_back(v);
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail_.size() > mark) {
            const Undo& undo = trail_.back();
            auto [u, v] = edge_vs_[static_cast<std::size_t>(undo.eid)];
            if (state_[static_cast<std::size_t>(undo.eid)] == EState::in) {
                --in_cnt_[static_cast<std::size_t>(u)];
                --in_cnt_[static_cast<std::size_t>(v)];
                ++und_cnt_[static_cast<std::size_t>(u)];
                ++und_cnt_[static_cast<std::size_t>(v)];
                --in_total_;
                if (undo.eu >= 0) {
                    chain_end_[static_cast<std::size_t>(undo.eu)] = undo.old_eu;
                    chain_end_[static_cast<std::size_t>(undo.ev)] = undo.old_ev;
                }
            } else {
                ++und_cnt_[static_cast<std::size_t>(u)];
                ++und_cnt_[static_cast<std::size_t>(v)];
            }
            state_[static_cast<std::size_t>(undo.eid)] = EState::undecided;
            trail_.pop_back();
        }
        queue_.clear();
    }

    bool propagate() {
        while (!queue_.empty()) {
            const int v = queue_.back();
            queue_.pop_back();
            const int in = in_cnt_[static_cast<std::size_t>(v)];
            const int und = und_cnt_[static_cast<std::size_t>(v)];
            if (in + und < 2 || in > 2) return false;
            if (und == 0) continue;
            if (in == 2) {
                scratch_.clear();
                for (int e : incident_[static_cast<std::size_t>(v)])
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided) scratch_.push_back(e);
                for (int e : scratch_)
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided && !set_out(e)) return false;
            } else if (in + und == 2) {
                scratch_.clear();
                for (int e : incident_[static_cast<std::size_t>(v)])
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided) scratch_.push_back(e);
                for (int e : scratch_)
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided && !set_in(e)) return false;
            }
        }
        return true;
    }

    bool usable_connected() {
        // All vertices must stay reachable through non-out edges.
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        std::uint64_t work = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : incident_[static_cast<std::size_t>(v)]) {
                ++work;
                if (state_[static_cast<std::size_t>(e)] == EState::out) continue;
                auto [a, b] = edge_vs_[static_cast<std::size_t>(e)];
                const int w = a == v ? b : a;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            }
        }
        charge(work);
        return visited == n_;
    }

    int pick_branch_edge() const {
        int fallback = -1;
        for (int v = 0; v < n_; ++v) {
            if (und_cnt_[static_cast<std::size_t>(v)] == 0) continue;
            if (in_cnt_[static_cast<std::size_t>(v)] == 1) {
                for (int e : incident_[static_cast<std::size_t>(v)])
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided) return e;
            }
            if (fallback < 0)
                for (int e : incident_[static_cast<std::size_t>(v)])
                    if (state_[static_cast<std::size_t>(e)] == EState::undecided) {
                        fallback = e;
                        break;
                    }
        }
        return fallback;
    }

    bool dfs() {
        if (!charge(1)) return false;
        if (in_total_ == n_) return true;
        if (!usable_connected() || over_budget_) return false;
        const int eid = pick_branch_edge();
        if (eid < 0) return false;
        const std::size_t mark = trail_.size();
        if (set_in(eid) && propagate()) {
            if (dfs()) return true;
        }
        rewind(mark);
        if (over_budget_) return false;
        if (set_out(eid) && propagate()) {
            if (dfs()) return true;
        }
        rewind(mark);
        return false;
    }

    std::vector<int> extract_cycle() const {
        std::vector<std::vector<int>> in_adj(static_cast<std::size_t>(n_));
        for (std::size_t e = 0; e < edge_vs_.size(); ++e)
            if (state_[e] == EState::in) {
                in_adj[static_cast<std::size_t>(edge_vs_[e].first)].push_back(edge_vs_[e].second);
                in_adj[static_cast<std::size_t>(edge_vs_[e].second)].push_back(edge_vs_[e].first);
            }
        std::vector<int> cycle;
        cycle.reserve(static_cast<std::size_t>(n_));
        int prev = -1;
        int cur = 0;
        for (int i = 0; i < n_; ++i) {
            cycle.push_back(cur);
            const auto& nb = in_adj[static_cast<std::size_t>(cur)];
            const int next = nb[0] != prev ? nb[0] : nb[1];
            prev = cur;
            cur = next;
        }
        return cycle;
    }
};

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices, bool keep_labels) {
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    Graph sub(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            const int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
        }
    if (keep_labels && g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(vertices.size());
        for (int v : vertices) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        sub.set_labels(std::move(labels));
    }
    return sub;
}

}  // namespace

SearchOutcome exact_hamiltonian_cycle(const Graph& g, std::uint64_t budget, std::vector<int>& witness,
                                      std::uint64_t& steps) {
    HamSolver solver(g, budget);
    const auto outcome = solver.solve(witness);
    steps = solver.steps_used();
    switch (outcome) {
        case HamSolver::Outcome::found: return SearchOutcome::found;
        case HamSolver::Outcome::none: return SearchOutcome::none;
        default: return SearchOutcome::budget;
    }
}

SearchOutcome exact_hamiltonian_path(const Graph& g, std::uint64_t budget, std::vector<int>& witness,
                                     std::uint64_t& steps) {
    const int n = static_cast<int>(g.order());
    steps = 0;
    if (n == 1) {
        witness = {0};
        return SearchOutcome::found;
    }
    // A spanning path of g is a spanning cycle of g plus an apex vertex.
    Graph aug(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : g.edges()) aug.add_edge(u, v);
    for (int v = 0; v < n; ++v) aug.add_edge(v, n);
    std::vector<int> cycle;
    const auto outcome = exact_hamiltonian_cycle(aug, budget, cycle, steps);
    if (outcome != SearchOutcome::found) return outcome;
    const auto apex = std::find(cycle.begin(), cycle.end(), n);
    witness.clear();
    witness.insert(witness.end(), apex + 1, cycle.end());
    witness.insert(witness.end(), cycle.begin(), apex);
    return SearchOutcome::found;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() > 700 || g2.order() > 700)
        throw too_large_error("are_isomorphic: capped at 700 vertices");
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (g1.order() == 0) return std::vector<int>{};
    IsoSearch search(g1, g2);
    if (!refine_colors(g1, g2, search.color1, search.color2)) return std::nullopt;
    if (!search.search(0)) return std::nullopt;
    return search.mapping;
}

std::optional<std::pair<std::size_t, std::size_t>> bipartite_parts(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    std::size_t count0 = 0, count1 = 0;
    for (std::size_t root = 0; root < g.order(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        ++count0;
        std::queue<int> bfs;
        bfs.push(static_cast<int>(root));
        while (!bfs.empty()) {
            const int v = bfs.front();
            bfs.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    ++(color[static_cast<std::size_t>(w)] == 0 ? count0 : count1);
                    bfs.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::pair{std::max(count0, count1), std::min(count0, count1)};
}

std::optional<std::vector<int>> forced_subcycle_certificate(const Graph& g) {
    std::vector<int> degree2;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<int>(v)) == 2) degree2.push_back(static_cast<int>(v));
    if (degree2.empty()) return std::nullopt;
    std::vector<char> in_c(g.order(), 0), is_d2(g.order(), 0);
    for (int v : degree2) {
        is_d2[static_cast<std::size_t>(v)] = 1;
        in_c[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) in_c[static_cast<std::size_t>(w)] = 1;
    }
    std::vector<int> closed;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (in_c[v]) closed.push_back(static_cast<int>(v));
    if (closed.size() == g.order()) return std::nullopt;  // not a proper subset
    // The induced subgraph must be 2-regular with every edge incident to a
    // degree-2 vertex, so all of its edges are forced into any spanning cycle.
    for (int v : closed) {
        int induced_degree = 0;
        for (int w : g.neighbors(v))
            if (in_c[static_cast<std::size_t>(w)]) {
                ++induced_degree;
                if (!is_d2[static_cast<std::size_t>(v)] && !is_d2[static_cast<std::size_t>(w)])
                    return std::nullopt;
            }
        if (induced_degree != 2) return std::nullopt;
    }
    return closed;
}

namespace {

HamiltonReport base_report(const Graph& g) {
    HamiltonReport report;
    report.connected = g.is_connected();
    return report;
}

void attach_bipartite(HamiltonReport& report, const Graph& g) {
    if (auto parts = bipartite_parts(g); parts && parts->first >= parts->second + 2)
        report.bipartite_obstruction = BipartiteImbalance{parts->first, parts->second};
}

}  // namespace

HamiltonReport hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
    HamiltonReport report = base_report(g);
    if (g.order() == 0) throw std::invalid_argument("hamiltonian_cycle: empty graph");
    if (!report.connected || g.order() < 3) {
        report.status = HamiltonStatus::neither;
        return report;
    }
    attach_bipartite(report, g);
    if (report.bipartite_obstruction) {
        report.status = HamiltonStatus::neither;
        return report;
    }
    if (auto cert = forced_subcycle_certificate(g)) {
        report.subcycle_obstruction = ForcedSubcycle{*cert};
        report.status = HamiltonStatus::neither;
        return report;
    }
    std::vector<int> cycle;
    switch (exact_hamiltonian_cycle(g, budget, cycle, report.steps)) {
        case SearchOutcome::found:
            report.status = HamiltonStatus::hamiltonian;
            report.witness = std::move(cycle);
            report.witness_is_cycle = true;
            break;
        case SearchOutcome::none: report.status = HamiltonStatus::neither; break;
        case SearchOutcome::budget: report.status = HamiltonStatus::unknown; break;
    }
    return report;
}

HamiltonReport hamiltonian_path(const Graph& g, std::uint64_t budget) {
    HamiltonReport report = base_report(g);
    if (g.order() == 0) throw std::invalid_argument("hamiltonian_path: empty graph");
    if (g.order() == 1) {
        report.status = HamiltonStatus::traceable_only;
        report.witness = {0};
        return report;
    }
    if (!report.connected) {
        report.status = HamiltonStatus::neither;
        return report;
    }
    attach_bipartite(report, g);
    if (report.bipartite_obstruction) {
        report.status = HamiltonStatus::neither;
        return report;
    }
    std::vector<int> path;
    switch (exact_hamiltonian_path(g, budget, path, report.steps)) {
        case SearchOutcome::found:
            report.status = HamiltonStatus::traceable_only;
            report.witness = std::move(path);
            break;
        case SearchOutcome::none: report.status = HamiltonStatus::neither; break;
        case SearchOutcome::budget: report.status = HamiltonStatus::unknown; break;
    }
    return report;
}

HamiltonReport classify_hamiltonicity(const Graph& g, std::uint64_t budget) {
    HamiltonReport report = hamiltonian_cycle(g, budget);
    if (report.status == HamiltonStatus::hamiltonian) return report;
    if (!report.connected || report.bipartite_obstruction) {
        report.status = HamiltonStatus::neither;
        return report;
    }
    if (g.order() == 1) {
        report.status = HamiltonStatus::traceable_only;
        report.witness = {0};
        return report;
    }
    const bool cycle_decided = report.status == HamiltonStatus::neither;
    HamiltonReport path_report = hamiltonian_path(g, budget);
    report.steps += path_report.steps;
    if (path_report.status == HamiltonStatus::traceable_only && cycle_decided) {
        report.status = HamiltonStatus::traceable_only;
        report.witness = std::move(path_report.witness);
        report.witness_is_cycle = false;
    } else if (path_report.status == HamiltonStatus::neither && cycle_decided) {
        report.status = HamiltonStatus::neither;
    } else {
        report.status = HamiltonStatus::unknown;
    }
    return report;
}

Graph h_subgraph(std::size_t n, std::size_t ell) {
    if (n < 19 || n % 6 != 1) throw std::invalid_argument("h_subgraph: n must be 6k+1 with k >= 3");
    const std::size_t k = (n - 1) / 6;
    if (ell < 2 || ell > 3 * k - 1 || ell % 6 != 2)
        throw std::invalid_argument("h_subgraph: offset must satisfy 2 <= l <= 3k-1 and l = 2 (mod 6)");
    const Graph b = bracelet((n - 1) / 3);
    const auto labels = all_cycle_labels(n);
    std::vector<int> vertices;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto d = static_cast<std::size_t>(labels[v].b - labels[v].a);
        const std::size_t offsets[2] = {d, n - d};
        for (std::size_t off : offsets)
            if (off == ell || off == ell + 3) {
                vertices.push_back(static_cast<int>(v));
                break;
            }
    }
    return induced_subgraph(b, vertices, true);
}

std::vector<CycleLabel> construct_hamilton_path_6k1(std::size_t k) {
    if (k < 3) throw std::invalid_argument("construct_hamilton_path_6k1: k must be >= 3");
    const std::size_t n = 6 * k + 1;
    const Graph b = bracelet((n - 1) / 3);
    const auto labels = all_cycle_labels(n);
    std::map<CycleLabel, int> index;
    for (std::size_t v = 0; v < labels.size(); ++v) index[labels[v]] = static_cast<int>(v);

    // Offset class of a label: the cycle of the spanning cycle-union it
    // belongs to, keyed by the smaller offset rounded down to 2 (mod 6).
    auto offset_class = [&](CycleLabel l) {
        const int d = l.b - l.a;
        const int dist = std::min(d, static_cast<int>(n) - d);
        return dist % 6 == 2 ? dist : dist - 3;
    };

    // Connecting path {0,2}, {0,5}, ..., alternating between cycle edges and
    // crossing edges; for odd k it runs one label further so that both ends
    // terminate on cycle edges.
    std::vector<int> connect;
    const int last_offset = static_cast<int>(k % 2 == 0 ? 3 * k - 1 : 3 * k + 2);
    for (int d = 2; d <= last_offset; d += 3) connect.push_back(index.at(make_cycle_label(n, 0, d)));
    std::set<std::pair<int, int>> connect_edges;
    for (std::size_t i = 0; i + 1 < connect.size(); ++i)
        connect_edges.insert(std::minmax(connect[i], connect[i + 1]));

    // Exchange: drop connecting-path edges that lie inside a cycle, add the
    // crossing ones.
    std::vector<std::vector<int>> adj(b.order());
    for (auto [u, v] : b.edges()) {
        const bool same_cycle = offset_class(labels[static_cast<std::size_t>(u)]) ==
                                offset_class(labels[static_cast<std::size_t>(v)]);
        const bool on_connect = connect_edges.count(std::minmax(u, v)) > 0;
        if (same_cycle != on_connect) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
    }

    const int start = connect.front();
    const int finish = connect.back();
    for (std::size_t v = 0; v < adj.size(); ++v) {
        const auto expected = (static_cast<int>(v) == start || static_cast<int>(v) == finish) ? 1u : 2u;
        if (adj[v].size() != expected)
            throw construction_error("construct_hamilton_path_6k1: exchanged subgraph has wrong degrees");
    }

    std::vector<int> sequence{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) {
                next = w;
                break;
            }
        if (next < 0) break;
        sequence.push_back(next);
        prev = cur;
        cur = next;
    }
    if (sequence.size() != b.order() || cur != finish)
        throw construction_error("construct_hamilton_path_6k1: exchanged subgraph is not a spanning path");

    // Verify the witness against the i-graph actually built from C_n.
    const IGraph ig = build_igraph(cycle(n));
    std::map<std::uint64_t, int> iset_index;
    for (std::size_t v = 0; v < ig.isets.size(); ++v)
        iset_index[ig.isets[v].mask()] = static_cast<int>(v);
    std::vector<char> seen(ig.isets.size(), 0);
    int prev_vertex = -1;
    for (int v : sequence) {
        const auto iset = label_to_iset(n, labels[static_cast<std::size_t>(v)]);
        const auto it = iset_index.find(iset.mask());
        if (it == iset_index.end() || seen[static_cast<std::size_t>(it->second)])
            throw construction_error("construct_hamilton_path_6k1: witness revisits or misses an i-set");
        seen[static_cast<std::size_t>(it->second)] = 1;
        if (prev_vertex >= 0 && !ig.graph.adjacent(prev_vertex, it->second))
            throw construction_error("construct_hamilton_path_6k1: witness uses a non-edge");
        prev_vertex = it->second;
    }
    if (sequence.size() != ig.isets.size())
        throw construction_error("construct_hamilton_path_6k1: witness does not span the i-graph");

    std::vector<CycleLabel> out;
    out.reserve(sequence.size());
    for (int v : sequence) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
}

PredictedClass predicted_cycle_classification(std::size_t n) {
    if (n < 3) throw std::invalid_argument("predicted_cycle_classification: n must be >= 3");
    if (n == 3) return PredictedClass::hamiltonian;
    if (n % 3 == 0) return PredictedClass::disconnected;
    if (n % 3 == 2) return PredictedClass::hamiltonian;
    if (n % 6 == 4) return PredictedClass::neither;  // includes the edgeless pair at n = 4
    if (n == 7 || n == 13) return PredictedClass::hamiltonian;
    return PredictedClass::traceable_only;
}

std::string predicted_class_name(PredictedClass c) {
    switch (c) {
        case PredictedClass::hamiltonian: return "hamiltonian";
        case PredictedClass::traceable_only: return "traceable_only";
        case PredictedClass::neither: return "neither";
        case PredictedClass::disconnected: return "disconnected";
    }
    return "?";
}

std::string status_name(HamiltonStatus s) {
    switch (s) {
        case HamiltonStatus::hamiltonian: return "hamiltonian";
        case HamiltonStatus::traceable_only: return "traceable_only";
        case HamiltonStatus::neither: return "neither";
        case HamiltonStatus::unknown: return "unknown";
    }
    return "?";
}

std::string to_json(const HamiltonReport& report) {
    nlohmann::ordered_json doc;
    doc["status"] = status_name(report.status);
    doc["connected"] = report.connected;
    if (!report.witness.empty()) {
        nlohmann::ordered_json witness;
        witness["kind"] = report.witness_is_cycle ? "cycle" : "path";
        witness["vertices"] = report.witness;
        doc["witness"] = std::move(witness);
    } else {
        doc["witness"] = nullptr;
    }
    if (report.bipartite_obstruction) {
        doc["obstruction"] = {{"kind", "bipartite_imbalance"},
                              {"parts", {report.bipartite_obstruction->part_a,
                                         report.bipartite_obstruction->part_b}}};
    } else if (report.subcycle_obstruction) {
        doc["obstruction"] = {{"kind", "forced_subcycle"},
                              {"vertices", report.subcycle_obstruction->vertices}};
    } else {
        doc["obstruction"] = nullptr;
    }
    doc["steps"] = report.steps;
    return doc.dump();
}

}  // namespace igraphs

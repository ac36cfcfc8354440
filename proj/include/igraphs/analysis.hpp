#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igraphs/families.hpp"
#include "igraphs/graph.hpp"

namespace igraphs {

enum class HamiltonStatus { hamiltonian, traceable_only, neither, unknown };

struct BipartiteImbalance {
    std::size_t part_a = 0;  // larger part
    std::size_t part_b = 0;
};

struct ForcedSubcycle {
    std::vector<int> vertices;  // closed neighborhood of the degree-2 vertices
};

// Result of a Hamiltonicity question. For hamiltonian_cycle, `neither`
// means "provably no Hamiltonian cycle"; for hamiltonian_path, `traceable_only`
// means "a spanning path exists". classify_hamiltonicity combines both
// searches and uses the statuses in their full sense.
struct HamiltonReport {
    HamiltonStatus status = HamiltonStatus::unknown;
    std::vector<int> witness;  // spanning cycle or path; empty when none
    bool witness_is_cycle = false;
    std::optional<BipartiteImbalance> bipartite_obstruction;
    std::optional<ForcedSubcycle> subcycle_obstruction;
    bool connected = false;
    std::uint64_t steps = 0;
};

// Exact isomorphism test with color-refinement pruning; returns a vertex
// mapping from g1 to g2 when isomorphic. Capped at 700 vertices.
std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2);

// Two-coloring class sizes (larger first), aggregated over components with
// a deterministic per-component assignment; empty when an odd cycle exists.
std::optional<std::pair<std::size_t, std::size_t>> bipartite_parts(const Graph& g);

HamiltonReport hamiltonian_cycle(const Graph& g, std::uint64_t budget);
HamiltonReport hamiltonian_path(const Graph& g, std::uint64_t budget);
HamiltonReport classify_hamiltonicity(const Graph& g, std::uint64_t budget);

// The underlying exact searches, without the certificate short-cuts; used to
// cross-check obstruction certificates against exhaustive search.
enum class SearchOutcome { found, none, budget };
SearchOutcome exact_hamiltonian_cycle(const Graph& g, std::uint64_t budget, std::vector<int>& witness,
                                      std::uint64_t& steps);
SearchOutcome exact_hamiltonian_path(const Graph& g, std::uint64_t budget, std::vector<int>& witness,
                                     std::uint64_t& steps);

// Closed neighborhood of the degree-2 vertices when it is a proper subset
// inducing a 2-regular subgraph whose edges all touch a degree-2 vertex.
// Such a set certifies non-Hamiltonicity: the forced edges close a cycle
// that does not span the graph.
std::optional<std::vector<int>> forced_subcycle_certificate(const Graph& g);

// Induced subgraph of the i-graph of C_n (n = 6k+1, k >= 3) on the labels
// at offsets l and l+3; a single cycle, spanning both offset classes or,
// when l = 3k-1 with k odd, the self-paired exceptional class.
Graph h_subgraph(std::size_t n, std::size_t ell);

// Explicit Hamiltonian path of the i-graph of C_{6k+1}, k >= 3: thread the
// offset-class cycles together along the label sequence {0,2},{0,5},...,
// exchanging cycle edges for connecting edges, then linearize. The result
// is verified against the built i-graph before returning.
std::vector<CycleLabel> construct_hamilton_path_6k1(std::size_t k);

// The closed-form classification of the i-graph of C_n.
enum class PredictedClass { hamiltonian, traceable_only, neither, disconnected };
PredictedClass predicted_cycle_classification(std::size_t n);
std::string predicted_class_name(PredictedClass c);

std::string status_name(HamiltonStatus s);
std::string to_json(const HamiltonReport& report);

}  // namespace igraphs

#pragma once

// Brute-force ground truth on the explicit graph. The forcing polynomial here
// is summed matching by matching, each forcing number found by exhaustive
// search and cross-checked against a maximum packing of disjoint alternating
// cycles.

#include "chs/hex_graph.hpp"
#include "chs/matchings.hpp"
#include "chs/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace chs {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on matchings visited by the brute-force polynomial.
inline constexpr std::uint64_t kDefaultMatchingBudget = 200000;

struct OracleOptions {
    std::uint64_t matching_budget = kDefaultMatchingBudget;
    /// Cap on alternating cycles enumerated per matching for packings.
    std::uint64_t cycle_budget = 2000000;
};

/// An alternating cycle as its vertex indices in traversal order.
using Cycle = std::vector<int>;

struct ForcingCertificate {
    MatchingSequence matching;
    std::size_t forcing_number = 0;
    EdgeSet witness_set;
    std::vector<Cycle> cycle_packing;
};

/// Deletes V(S), then pendant elimination must empty the
/// graph.
bool forcing_by_pendant_elimination(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset);

/// Cycle test: no matching-alternating cycle avoids V(S).
bool forcing_by_alternating_cycles(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset);

/// Runs both tests and throws std::logic_error if they disagree.
/// Throws std::invalid_argument if `subset` is not contained in `matching`.
bool is_forcing_set(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset);

/// A forcing set of minimum size, by iterative deepening over subsets of
/// the matching (branching on the matching edges of an alternating cycle
/// that the current subset misses).
EdgeSet minimum_forcing_set_search(const HexGraph& graph, const EdgeSet& matching);

/// Every alternating cycle of the matching. Throws BudgetExceeded past
/// `limit` cycles.
std::vector<Cycle> alternating_cycles(const HexGraph& graph, const EdgeSet& matching,
                                      std::uint64_t limit = OracleOptions{}.cycle_budget);

/// A maximum set of pairwise vertex-disjoint alternating cycles, by exact
/// branch and bound over the cycle list.
std::vector<Cycle> max_disjoint_alternating_cycles(const HexGraph& graph, const EdgeSet& matching,
                                                   std::uint64_t limit = OracleOptions{}.cycle_budget);

/// Both the subset search and the cycle packing; throws std::logic_error if
/// their sizes differ. Throws MatchingError if `matching` is not perfect.
ForcingCertificate forcing_number(const HexGraph& graph, const EdgeSet& matching,
                                  const OracleOptions& options = {});

/// Sum over all perfect matchings of x^{forcing number}. Throws
/// BudgetExceeded when the system has more than options.matching_budget
/// matchings.
Polynomial forcing_polynomial_bruteforce(const AnySpec& spec, const OracleOptions& options = {});
std::set<std::size_t> forcing_spectrum(const AnySpec& spec, const OracleOptions& options = {});

/// Alternating cycle as the hexagon whose boundary it is, if any.
std::optional<HexId> cycle_hexagon(const HexGraph& graph, const Cycle& cycle);

/// Perfect matchings by plain backtracking on the graph (no use of the
/// sequence bijection). Throws BudgetExceeded past `limit` matchings.
std::vector<EdgeSet> enumerate_perfect_matchings(const HexGraph& graph, std::uint64_t limit);

/// Perfect matchings of the subgraph induced by `alive`, counted up to `cap`.
std::uint64_t count_perfect_matchings(const HexGraph& graph, const std::vector<char>& alive, std::uint64_t cap);

}  // namespace chs

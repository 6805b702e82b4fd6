#pragma once

// Minimum forcing sets of perfect matchings of monotonic systems in time
// linear in the number of rows.
//
// The scan walks the rows from the bottom up with a column cap l_t per row.
// When the current row's vertical edge sits at its cap, the whole run of
// rows sharing that column is settled by one oblique edge r_{i,a_i} at the
// top of the run; otherwise the vertical edge e_{j,a_j} is taken. Either
// choice lowers the caps of every row above. All caps are lowered by the
// same amount at once, so they are kept as one running minimum instead of
// being rewritten row by row.

#include "chs/hex_graph.hpp"
#include "chs/matchings.hpp"
#include "chs/spec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chs {

struct MinForceResult {
    EdgeSet forcing_set;
    /// The same edges in the order the scan added them.
    std::vector<EdgeLabel> order;
    /// Basic steps taken: one per row for the run table plus one per scan
    /// iteration.
    std::uint64_t operations = 0;
};

/// Throws MatchingError on a sequence that is not valid for `spec`.
MinForceResult minimum_forcing_set_counted(const ChsSpec& spec, const MatchingSequence& seq);
EdgeSet minimum_forcing_set(const ChsSpec& spec, const MatchingSequence& seq);

struct OracleComparison {
    MatchingSequence matching;
    EdgeSet algorithm_set;
    EdgeSet oracle_set;
    std::size_t oracle_forcing_number = 0;
    /// The algorithm's set passes the forcing test.
    bool algorithm_set_forces = false;
    /// Dropping any one edge breaks forcing.
    bool algorithm_set_minimal = false;
    bool agrees() const {
        return algorithm_set_forces && algorithm_set_minimal && algorithm_set.size() == oracle_forcing_number;
    }
};

/// Runs the linear scan and the exhaustive oracle on one matching.
OracleComparison verify_against_oracle(const ChsSpec& spec, const MatchingSequence& seq);
/// Reuses a prebuilt graph of `spec`.
OracleComparison verify_against_oracle(const HexGraph& graph, const MatchingSequence& seq);

/// One line per comparison, ending in "ok" or "MISMATCH".
std::string to_string(const OracleComparison& report);

}  // namespace chs

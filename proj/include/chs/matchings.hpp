#pragma once

// Perfect matchings of a constructable hexagonal system as sequences.
//
// Every perfect matching uses exactly one vertical edge per row; recording
// the column a_i of the vertical edge e_{i,a_i} in row i gives a bijection
// with the non-decreasing sequences a_i in {h_i-1, ..., k_i}. For a
// one-turning system the two halves give a pair of sequences whose
// turning-row entries name the same edge: a_m - h_m = a'_{m'} - h'_{m'}.

#include "chs/hex_graph.hpp"
#include "chs/polynomial.hpp"
#include "chs/spec.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chs {

struct MatchingSequence {
    std::vector<int> upper;
    std::optional<std::vector<int>> lower;
    friend auto operator<=>(const MatchingSequence&, const MatchingSequence&) = default;
};

class MatchingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "0,3,3,4,4" or "(0,1,1,5|0,0,3)".
std::string to_string(const MatchingSequence& seq);
/// Accepts the to_string forms; a lower half may also be written "((0,1,1,5),(0,0,3))".
MatchingSequence parse_matching(const std::string& text);

/// Throws MatchingError unless `seq` encodes a perfect matching of `spec`.
void check_sequence(const AnySpec& spec, const MatchingSequence& seq);
bool is_valid_sequence(const AnySpec& spec, const MatchingSequence& seq);

/// The chosen vertical edges plus the oblique edges they force. Throws
/// MatchingError on an invalid sequence.
EdgeSet sequence_to_matching(const HexGraph& graph, const MatchingSequence& seq);

/// Throws MatchingError if `matching` is not a perfect matching of `graph`
/// or some row holds other than one vertical edge.
MatchingSequence matching_to_sequence(const HexGraph& graph, const EdgeSet& matching);

/// Lexicographic on (upper, lower). The callback returns false to stop.
void for_each_sequence(const AnySpec& spec, const std::function<bool(const MatchingSequence&)>& visit);
std::vector<MatchingSequence> enumerate_sequences(const AnySpec& spec);

/// Row-by-row count of valid sequences; the empty system has one matching.
Integer count_matchings(const AnySpec& spec);

bool is_perfect_matching(const HexGraph& graph, const EdgeSet& matching);

std::vector<int> edge_indices(const HexGraph& graph, const EdgeSet& edges);
EdgeSet edge_labels(const HexGraph& graph, const std::vector<int>& edges);

}  // namespace chs

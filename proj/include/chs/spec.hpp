#pragma once

// Parameter-sequence descriptions of constructable hexagonal systems.
//
// A monotonic system is given by rows (k_i, h_i): row i holds the hexagons
// C_{i,j} for h_i <= j <= k_i, with both sequences non-decreasing. A
// one-turning system pastes the last row of a second monotonic system
// (turned upside down) onto the last row of the first.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace chs {

struct Row {
    int k = 0;
    int h = 0;
    friend auto operator<=>(const Row&, const Row&) = default;
};

/// Raised by the validators. row() is the 1-based offending row, or 0 when
/// the problem is not tied to one row.
class SpecError : public std::invalid_argument {
public:
    SpecError(const std::string& what, std::size_t row = 0)
        : std::invalid_argument(what), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

class ChsSpec {
public:
    /// The empty system (no rows, empty graph).
    ChsSpec() = default;

    const std::vector<Row>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    /// 1-based row access, matching the usual C_{i,j} indexing.
    const Row& row(std::size_t i) const { return rows_.at(i - 1); }
    int k(std::size_t i) const { return row(i).k; }
    int h(std::size_t i) const { return row(i).h; }

    std::size_t hexagon_count() const;

    /// Rows 1..count with every k capped at `cap`, then trailing rows whose
    /// cap fell below h dropped. The result is again a valid system; zero
    /// remaining rows give the empty system.
    ChsSpec truncated(std::size_t count, int cap) const;

    /// Rows 1..count unchanged (count may be 0).
    ChsSpec prefix(std::size_t count) const;

    friend bool operator==(const ChsSpec&, const ChsSpec&) = default;
    friend auto operator<=>(const ChsSpec&, const ChsSpec&) = default;

private:
    friend ChsSpec validate_monotonic(std::span<const Row> rows);
    explicit ChsSpec(std::vector<Row> rows) : rows_(std::move(rows)) {}

    std::vector<Row> rows_;
};

class TurningChsSpec {
public:
    const ChsSpec& upper() const { return upper_; }
    const ChsSpec& lower() const { return lower_; }

    /// Column offset between the two namings of the turning row:
    /// C_{m,i} = C'_{m',i-offset()}.
    int offset() const;

    std::size_t hexagon_count() const;

    friend bool operator==(const TurningChsSpec&, const TurningChsSpec&) = default;
    friend auto operator<=>(const TurningChsSpec&, const TurningChsSpec&) = default;

private:
    friend TurningChsSpec validate_turning(std::span<const Row>, std::span<const Row>);
    TurningChsSpec(ChsSpec upper, ChsSpec lower) : upper_(std::move(upper)), lower_(std::move(lower)) {}

    ChsSpec upper_;
    ChsSpec lower_;
};

using AnySpec = std::variant<ChsSpec, TurningChsSpec>;

/// Checks 1 <= h_j <= k_j and that both sequences are non-decreasing.
ChsSpec validate_monotonic(std::span<const Row> rows);

/// Validates each half, then the turning constraints: both halves need at
/// least two rows, and the pasted rows must have equal length. A one-row
/// lower half describes a monotonic system and is rejected with a hint.
TurningChsSpec validate_turning(std::span<const Row> upper, std::span<const Row> lower);

ChsSpec make_monotonic(std::vector<int> ks, std::vector<int> hs);
TurningChsSpec make_turning(std::vector<int> ks, std::vector<int> hs,
                            std::vector<int> lower_ks, std::vector<int> lower_hs);

std::size_t hexagon_count(const AnySpec& spec);

/// "CHS(3,3,3,4,5;1,1,2,2,3)" / "CHS(3,3,5,5;1,2,2,4|1,2,3;1,1,2)".
std::string to_string(const ChsSpec& spec);
std::string to_string(const TurningChsSpec& spec);
std::string to_string(const AnySpec& spec);

/// Parses the compact notation "3,3,3,4,5;1,1,2,2,3" or
/// "k..;h..|k'..;h'..", optionally wrapped in "CHS(...)".
AnySpec parse_notation(const std::string& text);

/// {"rows":[{"k":..,"h":..},...]} or {"upper":{...},"lower":{...}}.
/// Unknown keys are ignored.
AnySpec parse_spec_json(const std::string& text);
std::string to_json(const AnySpec& spec);

/// Parses `source` as JSON or compact notation; anything else is read as a file path.
AnySpec load_spec(const std::string& source);

// Special families.
ChsSpec linear_chain(int k);
ChsSpec parallelogram(int k, int m);
ChsSpec truncated_parallelogram(std::span<const int> ks);
/// Zigzag chain with n >= 0 hexagons; n = 0 is the empty system.
ChsSpec zigzag(int n);

/// Every valid monotonic spec with 1..max_rows rows and all k <= max_k,
/// ordered by row count, then lexicographically on the rows.
std::vector<ChsSpec> all_monotonic_specs(std::size_t max_rows, int max_k);

/// Every valid turning spec with 2 <= m, m' <= max_rows and all k, k' <=
/// max_k, ordered by (m, m', upper rows, lower rows).
std::vector<TurningChsSpec> all_turning_specs(std::size_t max_rows, int max_k);

}  // namespace chs

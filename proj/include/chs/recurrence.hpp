#pragma once

// Recurrence engines for forcing polynomials of monotonic and one-turning
// systems. Closed forms for a few named families sit at the bottom.
//
// Every engine reduces to forcing polynomials of monotonic systems whose row
// caps have been lowered. Those subproblems are memoized on their normalized
// rows, so two truncations that leave the same rows share an entry.

#include "chs/polynomial.hpp"
#include "chs/spec.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

namespace chs {

/// Memo table keyed on normalized row sequences. Lookups may run
/// concurrently; inserts take an exclusive lock, and re-inserting a key
/// keeps the first value (both would be equal anyway).
class ForcingMemo {
public:
    std::optional<Polynomial> find(const std::vector<Row>& rows) const;
    void insert(const std::vector<Row>& rows, const Polynomial& value);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::map<std::vector<Row>, Polynomial> table_;
};

/// Pass a table to reuse subresults across calls; by default each call
/// builds its own.
Polynomial forcing_poly_monotonic(const ChsSpec& spec, ForcingMemo* shared = nullptr);

/// All h = 1. Throws SpecError if `ks` is empty or decreasing.
Polynomial forcing_poly_truncated_parallelogram(const std::vector<int>& ks, ForcingMemo* shared = nullptr);

/// (k+1)x. Throws std::invalid_argument for k < 1.
Polynomial linear_chain_poly(int k);

/// F(Z_n) = 2F(Z_{n-2})x + F(Z_{n-3})x from F(Z_0)=1, F(Z_1)=2x, F(Z_2)=3x.
/// Throws std::invalid_argument for n < 0.
Polynomial zigzag_poly(int n);

/// F(M(k,m)) = sum_{i<k} F(M(i,m-1))x + sum_{j<m} F(M(k-1,j))x with
/// F(M(0,n)) = F(M(n,0)) = 1. Throws std::invalid_argument if k or m < 0.
Polynomial parallelogram_poly(int k, int m);

enum class TurningCase { strict = 1, equal = 2 };

/// Strict when k_{m-1}+k'_{m'-1} < k_m+k'_{m'}, equal otherwise.
TurningCase turning_case(const TurningChsSpec& spec);

/// Number of hexagons on the zigzag walk C_{m,k_m}, C_{m-1,k_m},
/// C_{m-1,k_m-1}, C_{m-2,k_m-1}, ... through the upper half, stopping at
/// the first position that is not a hexagon. Throws std::invalid_argument
/// on a strict-case spec.
int maximal_zigzag_length(const TurningChsSpec& spec);

Polynomial forcing_poly_turning(const TurningChsSpec& spec, ForcingMemo* shared = nullptr);

/// Dispatches on the spec type.
Polynomial forcing_poly(const AnySpec& spec, ForcingMemo* shared = nullptr);

/// Smallest 1-based row whose column range [h, k] contains z. Throws
/// std::invalid_argument when no row does.
std::size_t p_index(const ChsSpec& spec, int z);

/// p_index of the lower half at column k'_{m'}.
std::size_t q_index(const TurningChsSpec& spec);

}  // namespace chs

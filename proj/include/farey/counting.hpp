#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "farey/seq_spec.hpp"

namespace farey {

// Largest Mobius table this library will sieve by default (1 byte per entry).
inline constexpr std::int64_t kDefaultSieveCap = 200'000'000;

// mu(d) for 1 <= d <= limit, built by a linear sieve.
class MobiusTable {
  public:
    explicit MobiusTable(std::int64_t limit, std::int64_t cap = kDefaultSieveCap);

    std::int64_t limit() const { return limit_; }
    int mu(std::int64_t d) const { return values_[static_cast<std::size_t>(d)]; }

  private:
    std::int64_t limit_;
    std::vector<std::int8_t> values_;
};

inline MobiusTable mobius_sieve(std::int64_t limit, std::int64_t cap = kDefaultSieveCap) {
    return MobiusTable(limit, cap);
}

// Closed-form term count for a descriptor. The l-restricted families reduce
// to plain Bool counts first. Half and MatImage descriptors have no closed
// form and throw NoFormulaError; count those by generating.
//
// All formulas with half-integer coefficients run in doubled integers with a
// final exact halving; a remainder would throw.
std::int64_t cardinality(const SeqSpec& spec, const MobiusTable& table);
std::int64_t cardinality(const SeqSpec& spec);

// |F_n| by the divisor recursion |F_n| = (n+3)n/2 - sum_{d=2..n} |F_floor(n/d)|,
// memoized over the ~2*sqrt(n) distinct floor values.
std::int64_t cardinality_full_recursive(std::int64_t n);

// The difference quantities between a family and F(B(n),m), each by its own
// closed-form Mobius sum. two_m_specialization is present only when n = 2m.
struct CardinalityDifferences {
    std::int64_t fupper_minus_bool = 0;  // |F_n^m| - |F(B(n),m)|
    std::int64_t glower_minus_bool = 0;  // |G_n^m| - |F(B(n),m)|
    std::int64_t full_minus_bool = 0;    // |F_n|   - |F(B(n),m)|
    std::optional<std::int64_t> two_m_specialization; // |F_2m^m| - |F(B(2m),m)| when n = 2m
};

CardinalityDifferences cardinality_differences(std::int64_t n, std::int64_t m,
                                               const MobiusTable& table);
CardinalityDifferences cardinality_differences(std::int64_t n, std::int64_t m);

// |F_n| for every n <= limit via the closed form; the inner loop is
// data-parallel across n when parallel is set.
std::vector<std::int64_t> full_cardinalities_upto(std::int64_t limit, bool parallel = true);

} // namespace farey

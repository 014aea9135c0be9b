#include "farey/counting.hpp"

#include <algorithm>
#include <unordered_map>

#include "farey/checked.hpp"
#include "farey/errors.hpp"

namespace farey {

MobiusTable::MobiusTable(std::int64_t limit, std::int64_t cap) : limit_(limit) {
    if (limit < 1) throw DomainError("sieve limit must be >= 1");
    if (limit > cap)
        throw CapError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                       std::to_string(cap));
    const std::size_t size = static_cast<std::size_t>(limit) + 1;
    values_.assign(size, 0);
    values_[1] = 1;
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(size, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            values_[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > limit) break;
            composite[static_cast<std::size_t>(i * p)] = true;
            if (i % p == 0) {
                values_[static_cast<std::size_t>(i * p)] = 0; // p^2 divides i*p
                break;
            }
            values_[static_cast<std::size_t>(i * p)] =
                static_cast<std::int8_t>(-values_[static_cast<std::size_t>(i)]);
        }
    }
}

namespace {

std::int64_t halve_exact(std::int64_t doubled) {
    if (doubled % 2 != 0)
        throw Error("doubled Mobius sum is odd; halving would truncate");
    return doubled / 2;
}

// 2*|F_n| = 3 + sum mu(d) * floor(n/d)^2
std::int64_t doubled_full(std::int64_t n, const MobiusTable& mu) {
    std::int64_t acc = 3;
    for (std::int64_t d = 1; d <= n; ++d) {
        const std::int64_t q = n / d;
        acc = checked_add(acc, checked_mul(mu.mu(d), checked_mul(q, q)));
    }
    return acc;
}

// 2*|F_n^m| = 3 + sum mu(d) * floor(m/d) * (2*floor(n/d) - floor(m/d)), m <= n
std::int64_t doubled_fupper(std::int64_t n, std::int64_t m, const MobiusTable& mu) {
    std::int64_t acc = 3;
    for (std::int64_t d = 1; d <= m; ++d) {
        const std::int64_t a = m / d;
        acc = checked_add(acc, checked_mul(mu.mu(d), checked_mul(a, 2 * (n / d) - a)));
    }
    return acc;
}

// |F(B(n),m)| = 2 + sum mu(d) * floor(m/d) * floor((n-m)/d)
std::int64_t bool_count(std::int64_t n, std::int64_t m, const MobiusTable& mu) {
    std::int64_t acc = 2;
    const std::int64_t bound = std::min(m, n - m);
    for (std::int64_t d = 1; d <= bound; ++d)
        acc = checked_add(acc, checked_mul(mu.mu(d), checked_mul(m / d, (n - m) / d)));
    return acc;
}

// Reduces the l-restricted families to plain F(B(.,.)) descriptors.
SeqSpec reduce_for_count(const SeqSpec& spec) {
    switch (spec.family()) {
        case Family::BoolF:
            return SeqSpec::boolean(spec.n() - spec.m() + spec.l(), spec.l());
        case Family::BoolG:
            return SeqSpec::boolean(spec.n() + spec.m() - spec.l(), spec.m());
        default:
            return spec;
    }
}

std::int64_t sieve_bound_for(const SeqSpec& spec) {
    switch (spec.family()) {
        case Family::Full: return spec.n();
        case Family::FUpper: return std::max<std::int64_t>(1, std::min(spec.m(), spec.n()));
        case Family::GLower: return std::max<std::int64_t>(1, spec.n() - spec.m());
        case Family::Bool: return std::max<std::int64_t>(1, std::min(spec.m(), spec.n() - spec.m()));
        default: return spec.base_order();
    }
}

} // namespace

std::int64_t cardinality(const SeqSpec& spec, const MobiusTable& table) {
    spec.validate();
    const SeqSpec reduced = reduce_for_count(spec);
    switch (reduced.family()) {
        case Family::Full:
            return halve_exact(doubled_full(reduced.n(), table));
        case Family::FUpper:
            // h <= k <= n, so the cutoff only bites below n.
            return halve_exact(
                doubled_fupper(reduced.n(), std::min(reduced.m(), reduced.n()), table));
        case Family::GLower:
            // |G_n^m| = |F_n^(n-m)|
            return halve_exact(doubled_fupper(reduced.n(), reduced.n() - reduced.m(), table));
        case Family::Bool:
            return bool_count(reduced.n(), reduced.m(), table);
        default:
            throw NoFormulaError("no closed-form count for " + spec.name() +
                                 "; count by generating");
    }
}

std::int64_t cardinality(const SeqSpec& spec) {
    spec.validate();
    const MobiusTable table(sieve_bound_for(reduce_for_count(spec)));
    return cardinality(spec, table);
}

std::int64_t cardinality_full_recursive(std::int64_t n) {
    if (n < 1) throw DomainError("order must be >= 1");
    static thread_local std::unordered_map<std::int64_t, std::int64_t> memo;
    struct Rec {
        std::unordered_map<std::int64_t, std::int64_t>& memo;
        std::int64_t operator()(std::int64_t v) const {
            if (v == 0) return 0;
            if (v == 1) return 2;
            if (auto it = memo.find(v); it != memo.end()) return it->second;
            // (v+3)v is even for every v, so the halving is exact.
            std::int64_t acc = checked_mul(checked_add(v, 3), v) / 2;
            for (std::int64_t d = 2; d <= v;) {
                const std::int64_t q = v / d;
                const std::int64_t last = v / q; // largest d with the same floor
                acc = checked_sub(acc, checked_mul(last - d + 1, (*this)(q)));
                d = last + 1;
            }
            memo.emplace(v, acc);
            return acc;
        }
    };
    return Rec{memo}(n);
}

CardinalityDifferences cardinality_differences(std::int64_t n, std::int64_t m,
                                               const MobiusTable& table) {
    if (m < 1 || m > n - 1) throw SpecError("differences need 1 <= m <= n-1");
    CardinalityDifferences out;

    // 2*(|F_n^m| - |F(B(n),m)|)
    //   = -1 + sum_{d<=m} mu(d)*floor(m/d)*(2 floor(n/d) - floor(m/d) - 2 floor((n-m)/d))
    std::int64_t acc = -1;
    for (std::int64_t d = 1; d <= m; ++d) {
        const std::int64_t a = m / d;
        acc = checked_add(acc,
                          checked_mul(table.mu(d),
                                      checked_mul(a, 2 * (n / d) - a - 2 * ((n - m) / d))));
    }
    out.fupper_minus_bool = halve_exact(acc);

    // Same shape with the roles of m and n-m swapped; the leading factor
    // floor((n-m)/d) vanishes above n-m, which is the binding bound.
    acc = -1;
    for (std::int64_t d = 1; d <= n - m; ++d) {
        const std::int64_t b = (n - m) / d;
        acc = checked_add(
            acc, checked_mul(table.mu(d), checked_mul(b, 2 * (n / d) - b - 2 * (m / d))));
    }
    out.glower_minus_bool = halve_exact(acc);

    // Full difference = sum of the two component differences; as one sum:
    // 2*(|F_n| - |F(B(n),m)|)
    //   = -2 + sum mu(d) * (2 floor(n/d)(a+b) - (a+b)^2 - 2ab), a=floor(m/d), b=floor((n-m)/d)
    acc = -2;
    for (std::int64_t d = 1; d <= std::max(m, n - m); ++d) {
        const std::int64_t a = m / d;
        const std::int64_t b = (n - m) / d;
        const std::int64_t s = a + b;
        acc = checked_add(
            acc, checked_mul(table.mu(d),
                             checked_sub(checked_mul(2 * (n / d), s),
                                         checked_add(checked_mul(s, s), 2 * a * b))));
    }
    out.full_minus_bool = halve_exact(acc);

    if (n == 2 * m) {
        // 2*(|F_2m^m| - |F(B(2m),m)|)
        //   = -1 + sum_{d<=m} mu(d)*floor(m/d)*(2 floor(2m/d) - 3 floor(m/d))
        acc = -1;
        for (std::int64_t d = 1; d <= m; ++d) {
            const std::int64_t a = m / d;
            acc = checked_add(
                acc, checked_mul(table.mu(d), checked_mul(a, 2 * ((2 * m) / d) - 3 * a)));
        }
        out.two_m_specialization = halve_exact(acc);
    }
    return out;
}

CardinalityDifferences cardinality_differences(std::int64_t n, std::int64_t m) {
    if (m < 1 || m > n - 1) throw SpecError("differences need 1 <= m <= n-1");
    const MobiusTable table(std::max<std::int64_t>(1, std::max(m, n - m)));
    return cardinality_differences(n, m, table);
}

std::vector<std::int64_t> full_cardinalities_upto(std::int64_t limit, bool parallel) {
    if (limit < 1) throw DomainError("limit must be >= 1");
    const MobiusTable table(limit);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t n = 1; n <= limit; ++n)
        counts[static_cast<std::size_t>(n)] = halve_exact(doubled_full(n, table));
    return counts;
}

} // namespace farey

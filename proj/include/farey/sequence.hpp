#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/fraction.hpp"
#include "farey/seq_spec.hpp"

namespace farey {

// Generation cap: largest Farey order this library will materialize by default.
inline constexpr std::int64_t kDefaultGenerationCap = 1'000'000;

// A realized sequence: the descriptor plus its strictly increasing terms.
// reversed_by_matrix is set when a MatImage matrix flipped the order and the
// terms were re-sorted ascending.
struct FareySeq {
    SeqSpec spec;
    std::vector<Frac> terms;
    bool reversed_by_matrix = false;

    std::int64_t size() const { return static_cast<std::int64_t>(terms.size()); }
};

// Successor of cur in F_n, given its predecessor prev.
// h3 = floor((k1+n)/k2)*h2 - h1 and likewise for k3.
Frac next_term(std::int64_t n, const Frac& prev, const Frac& cur);

// Streams F_n term by term via the next-term recurrence, without
// materializing the sequence. next() returns nullopt after 1/1.
class FareyStream {
  public:
    explicit FareyStream(std::int64_t n);
    std::optional<Frac> next();

  private:
    std::int64_t n_;
    std::optional<Frac> prev_;
    std::optional<Frac> cur_;
};

// Serial reference: materializes F_n with the next-term recurrence.
std::vector<Frac> full_sequence_recurrence(std::int64_t n);

// Data-parallel construction of F_n: enumerate coprime pairs per denominator,
// then sort. Same result as the recurrence; used by the benchmark and as a
// second route in tests.
std::vector<Frac> full_sequence_enumerate(std::int64_t n, bool parallel = true);

// Builds the complete sorted sequence for any descriptor.
// Full(n) uses the recurrence; filter families filter the base F_n;
// MatImage applies the matrix termwise and normalizes ascending.
FareySeq generate(const SeqSpec& spec, std::int64_t cap = kDefaultGenerationCap);

// Result of check_identity_laws: how many instances of each law were checked.
struct IdentityReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t intersection_checks = 0;  // F_n^m  cap  G_n^m  = F(B(n),m)
    std::int64_t union_checks = 0;         // F_n^m  cup  G_n^m  = F_n
    std::int64_t f_reduction_checks = 0;   // F(B(n),m)^l = F(B(n-m+l),l)
    std::int64_t g_reduction_checks = 0;   // G(B(n),m)^l = F(B(n+m-l),m)
    std::int64_t cross_checks = 0;         // F(B(n),m)^l cap G(B(n),m)^(n-lam) = F(B(l+lam),l)
    std::int64_t total() const {
        return intersection_checks + union_checks + f_reduction_checks + g_reduction_checks +
               cross_checks;
    }
};

// Verifies, as exact sequence equalities, every identity law at (n, m):
// intersection, union, both reductions over all valid l, and the l/lambda
// intersection identity. Throws IdentityViolation naming the first law that
// fails; returns the tally otherwise.
IdentityReport check_identity_laws(std::int64_t n, std::int64_t m);

// Report of a consecutive-triple scan.
struct NeighborReport {
    std::int64_t triples_checked = 0;
};

// Asserts k_j*h_{j+1} - h_j*k_{j+1} = 1 for consecutive terms and that every
// middle term is the reduced mediant of its neighbors. Throws
// NeighborViolation with the failing index. Sequences with fewer than three
// terms pass vacuously (the determinant condition is still checked pairwise).
NeighborReport neighbor_check(const FareySeq& seq);

std::string terms_to_plain(const std::vector<Frac>& terms);
std::vector<Frac> parse_terms(const std::string& plain); // whitespace-separated "h/k h/k ..."

} // namespace farey

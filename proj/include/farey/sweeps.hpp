#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/counting.hpp"
#include "farey/registry.hpp"
#include "farey/sequence.hpp"

namespace farey::sweeps {

// Parameter ranges for the verification matrix. Defaults match the shipping
// acceptance bounds.
struct Bounds {
    std::int64_t count_max_n = 300;    // three-way F_n count agreement
    std::int64_t family_max_n = 120;   // closed-form family counts vs generated
    std::int64_t identity_max_n = 60;  // identity laws over all 1 <= m < n
    std::int64_t registry_max_m = 8;   // (m, s) grid for scaled entries
    std::int64_t registry_max_s = 2;
    std::int64_t registry_max_n = 24;  // (n, m, l) ranges for complement entries
    std::int64_t pair_max_s = 4;       // word-pair sweep
    std::int64_t pair_max_m = 6;
    std::int64_t injection_max_s = 5;  // word-injection sweep
    std::int64_t injection_max_m = 8;
    std::int64_t swap_max_len = 4;     // complement-of-word-image sweep
    std::int64_t swap_max_m = 6;
    std::int64_t power_range = 10;     // closed-form matrix power identities
};

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    double seconds = 0.0;
    std::string first_failure;

    bool pass() const { return failures == 0; }
};

// Each suite checks one slice of the matrix. All are pure; `parallel`
// switches the OpenMP kernel on, the serial path is the reference.
SuiteResult run_golden_sequences();
SuiteResult run_counting(const Bounds& b, bool parallel);
SuiteResult run_family_counts(const Bounds& b, bool parallel);
SuiteResult run_identity_laws(const Bounds& b, bool parallel);
SuiteResult run_registry(const Bounds& b, bool parallel);
SuiteResult run_mapped_triples();
SuiteResult run_word_pairs(const Bounds& b, bool parallel);
SuiteResult run_word_injections(const Bounds& b, bool parallel);
SuiteResult run_power_identities(const Bounds& b);
SuiteResult run_word_swap(const Bounds& b, bool parallel);

std::vector<SuiteResult> run_all(const Bounds& b, bool parallel);

} // namespace farey::sweeps

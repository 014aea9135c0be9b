// Acceptance suite: one criterion per line, each with a hard runtime budget.
// Exits nonzero if any criterion fails its checks or its budget.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "farey/sweeps.hpp"
#include "oracles.hpp"

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<farey::sweeps::SuiteResult()> run;
};

} // namespace

int main() {
    using farey::sweeps::Bounds;
    using farey::sweeps::SuiteResult;
    const Bounds bounds; // shipping defaults: n<=300/120/60, m<=8, s<=2, words to length 5
    const bool parallel = true;

    const std::vector<Criterion> criteria = {
        {"golden sequence rows reproduce exactly", 1.0,
         [&] { return farey::sweeps::run_golden_sequences(); }},
        {"F_n counts: closed form = recursion = generation, n <= 300; first ten match "
         "brute force",
         5.0,
         [&] {
             SuiteResult r = farey::sweeps::run_counting(bounds, parallel);
             // Independent enumeration for the first ten counts.
             static const std::int64_t expected[10] = {2, 3, 5, 7, 11, 13, 19, 23, 29, 33};
             for (std::int64_t n = 1; n <= 10; ++n) {
                 ++r.cases;
                 if (static_cast<std::int64_t>(oracle::farey(n).size()) != expected[n - 1]) {
                     ++r.failures;
                     r.first_failure = "brute-force |F_" + std::to_string(n) + "| is off";
                 }
             }
             return r;
         }},
        {"family counts and all difference formulas exact for 1 <= m < n <= 120", 30.0,
         [&] { return farey::sweeps::run_family_counts(bounds, parallel); }},
        {"identity laws hold for all 1 <= m < n <= 60, every l and lambda", 30.0,
         [&] { return farey::sweeps::run_identity_laws(bounds, parallel); }},
        {"all 72 catalog entries verify for m <= 8, s <= 2 (n <= 24 complement family)", 60.0,
         [&] {
             SuiteResult r = farey::sweeps::run_registry(bounds, parallel);
             if (farey::registry().size() != 72) {
                 ++r.failures;
                 r.first_failure = "catalog holds " + std::to_string(farey::registry().size()) +
                                   " entries, expected 72";
             }
             return r;
         }},
        {"worked triple: eq35 preserving, eq47 reversing onto the same image, eq60 "
         "involutory with fixed point 2/5",
         1.0, [&] { return farey::sweeps::run_mapped_triples(); }},
        {"word-pair bijections N*M^-1 and N*J*M^-1 for lengths <= 4, m <= 6", 60.0,
         [&] { return farey::sweeps::run_word_pairs(bounds, parallel); }},
        {"word injections into F_n: half confinement and neighbor law, lengths <= 5, m <= 8",
         60.0, [&] { return farey::sweeps::run_word_injections(bounds, parallel); }},
        {"matrix power closed forms, exponents in [-10, 10]", 1.0,
         [&] { return farey::sweeps::run_power_identities(bounds); }},
        {"letter-swap complement bijections for word lengths <= 4, m <= 6", 30.0,
         [&] { return farey::sweeps::run_word_swap(bounds, parallel); }},
    };

    int failures = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        SuiteResult result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.failures = 1;
            result.first_failure = e.what();
        }
        total += result.seconds;
        const bool in_budget = result.seconds < c.budget_seconds;
        const bool pass = result.pass() && in_budget;
        failures += !pass;
        std::printf("criterion %2zu: %s  %s  (%lld cases, %.2fs, budget %.0fs)\n", i + 1,
                    pass ? "PASS" : "FAIL", c.name.c_str(),
                    static_cast<long long>(result.cases), result.seconds, c.budget_seconds);
        if (!result.pass())
            std::printf("              first failure: %s\n", result.first_failure.c_str());
        else if (!in_budget)
            std::printf("              over budget\n");
    }
    std::printf("%d of %zu criteria passed (%.2fs total)\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 ? 0 : 1;
}

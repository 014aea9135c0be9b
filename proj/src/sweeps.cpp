#include "farey/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "farey/errors.hpp"
#include "farey/words.hpp"

namespace farey::sweeps {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(i) for i in [0, count); failures (exceptions) are tallied and the
// lowest-index message kept, so serial and parallel runs report identically.
template <typename Fn>
void sweep(SuiteResult& result, std::int64_t count, bool parallel, Fn&& body) {
    const auto start = Clock::now();
    std::int64_t failures = 0;
    std::int64_t first_index = -1;
    std::string first_message;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (const std::exception& e) {
            const std::string message = e.what();
#pragma omp critical
            {
                ++failures;
                if (first_index < 0 || i < first_index) {
                    first_index = i;
                    first_message = message;
                }
            }
        }
    }
    result.cases += count;
    result.failures += failures;
    if (result.first_failure.empty()) result.first_failure = first_message;
    result.seconds += std::chrono::duration<double>(Clock::now() - start).count();
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw VerificationFailure(what);
}

const std::vector<std::pair<SeqSpec, std::string>>& golden_rows() {
    static const std::vector<std::pair<SeqSpec, std::string>> rows = {
        {SeqSpec::full(6), "0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 5/6 1/1"},
        {SeqSpec::f_upper(6, 4), "0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1"},
        {SeqSpec::g_lower(6, 4), "0/1 1/3 1/2 3/5 2/3 3/4 4/5 5/6 1/1"},
        {SeqSpec::boolean(6, 4), "0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1"},
        {SeqSpec::bool_f(6, 4, 3), "0/1 1/3 1/2 3/5 2/3 3/4 1/1"},
        {SeqSpec::bool_f(6, 3, 2), "0/1 1/4 1/3 2/5 1/2 2/3 1/1"},
        {SeqSpec::bool_g(6, 4, 5), "0/1 1/2 2/3 3/4 4/5 1/1"},
        {SeqSpec::bool_g(6, 1, 2), "0/1 1/5 1/4 1/3 1/2 1/1"},
        {SeqSpec::full(8),
         "0/1 1/8 1/7 1/6 1/5 1/4 2/7 1/3 3/8 2/5 3/7 1/2 4/7 3/5 5/8 2/3 5/7 3/4 4/5 5/6 "
         "6/7 7/8 1/1"},
        {SeqSpec::boolean(8, 4), "0/1 1/5 1/4 1/3 2/5 3/7 1/2 4/7 3/5 2/3 3/4 4/5 1/1"},
        {SeqSpec::full(4), "0/1 1/4 1/3 1/2 2/3 3/4 1/1"},
        {SeqSpec::boolean(4, 2), "0/1 1/3 1/2 2/3 1/1"},
        {SeqSpec::full(2), "0/1 1/2 1/1"},
        {SeqSpec::full(1), "0/1 1/1"},
    };
    return rows;
}

} // namespace

SuiteResult run_golden_sequences() {
    SuiteResult result;
    result.name = "golden-sequences";
    const auto& rows = golden_rows();
    sweep(result, static_cast<std::int64_t>(rows.size()), false, [&](std::int64_t i) {
        const auto& [spec, expected] = rows[static_cast<std::size_t>(i)];
        const FareySeq seq = generate(spec);
        expect(seq.terms == parse_terms(expected),
               spec.name() + " generated " + terms_to_plain(seq.terms) + ", expected " +
                   expected);
    });
    return result;
}

SuiteResult run_counting(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "counting";
    static const std::int64_t first_ten[10] = {2, 3, 5, 7, 11, 13, 19, 23, 29, 33};
    const MobiusTable table(b.count_max_n);
    sweep(result, b.count_max_n, parallel, [&](std::int64_t i) {
        const std::int64_t n = i + 1;
        const std::int64_t closed = cardinality(SeqSpec::full(n), table);
        const std::int64_t recursive = cardinality_full_recursive(n);
        const std::int64_t generated = generate(SeqSpec::full(n)).size();
        expect(closed == recursive && closed == generated,
               "F_" + std::to_string(n) + " counts disagree: closed " + std::to_string(closed) +
                   ", recursive " + std::to_string(recursive) + ", generated " +
                   std::to_string(generated));
        if (n <= 10)
            expect(closed == first_ten[n - 1], "|F_" + std::to_string(n) + "| = " +
                                                   std::to_string(closed) + ", expected " +
                                                   std::to_string(first_ten[n - 1]));
    });
    return result;
}

SuiteResult run_family_counts(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "family-counts";
    const MobiusTable table(b.family_max_n);
    sweep(result, b.family_max_n - 1, parallel, [&](std::int64_t i) {
        const std::int64_t n = i + 2;
        const std::vector<Frac> full = full_sequence_recurrence(n);
        const std::int64_t full_count = static_cast<std::int64_t>(full.size());
        for (std::int64_t m = 1; m <= n - 1; ++m) {
            std::int64_t fupper = 0, glower = 0, boolean = 0;
            for (const Frac& t : full) {
                const bool in_f = t.num() <= m;
                const bool in_g = m + t.den() - n <= t.num();
                fupper += in_f;
                glower += in_g;
                boolean += in_f && in_g;
            }
            const auto tag = [&](const char* name) {
                return std::string(name) + " at n=" + std::to_string(n) +
                       " m=" + std::to_string(m);
            };
            expect(cardinality(SeqSpec::f_upper(n, m), table) == fupper, tag("|F_n^m|"));
            expect(cardinality(SeqSpec::g_lower(n, m), table) == glower, tag("|G_n^m|"));
            expect(cardinality(SeqSpec::boolean(n, m), table) == boolean, tag("|F(B(n),m)|"));

            const CardinalityDifferences d = cardinality_differences(n, m, table);
            expect(d.fupper_minus_bool == fupper - boolean, tag("|F_n^m|-|F(B(n),m)|"));
            expect(d.glower_minus_bool == glower - boolean, tag("|G_n^m|-|F(B(n),m)|"));
            expect(d.full_minus_bool == full_count - boolean, tag("|F_n|-|F(B(n),m)|"));
            if (n == 2 * m) {
                expect(d.two_m_specialization && *d.two_m_specialization == fupper - boolean,
                       tag("|F_2m^m|-|F(B(2m),m)|"));
                expect(full_count - boolean == 2 * *d.two_m_specialization,
                       tag("|F_2m|-|F(B(2m),m)| = 2(|F_2m^m|-|F(B(2m),m)|)"));
            }
        }
    });
    return result;
}

SuiteResult run_identity_laws(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "identity-laws";
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t n = 2; n <= b.identity_max_n; ++n)
        for (std::int64_t m = 1; m <= n - 1; ++m) pairs.emplace_back(n, m);
    std::int64_t laws = 0;
    const auto start = Clock::now();
    std::int64_t failures = 0;
    std::string first;
    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : laws, failures) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& [n, m] = pairs[static_cast<std::size_t>(i)];
        try {
            laws += check_identity_laws(n, m).total();
        } catch (const std::exception& e) {
            ++failures;
#pragma omp critical
            if (first.empty()) first = e.what();
        }
    }
    result.cases = laws;
    result.failures = failures;
    result.first_failure = first;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

SuiteResult run_registry(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "registry";
    std::vector<std::pair<const MapEntry*, MapParams>> instances;
    for (const MapEntry& entry : registry()) {
        for (const MapParams& p :
             parameter_grid(entry, b.registry_max_m, b.registry_max_s, b.registry_max_n))
            instances.emplace_back(&entry, p);
    }
    sweep(result, static_cast<std::int64_t>(instances.size()), parallel, [&](std::int64_t i) {
        const auto& [entry, params] = instances[static_cast<std::size_t>(i)];
        verify_map(*entry, params);
    });
    return result;
}

SuiteResult run_mapped_triples() {
    SuiteResult result;
    result.name = "mapped-triples";
    sweep(result, 3, false, [&](std::int64_t i) {
        const MapParams p{.m = 1, .s = 1};
        if (i == 0) {
            const MapEntry* eq35 = find_entry("eq35");
            expect(eq35 != nullptr, "eq35 missing from registry");
            const FareySeq dom = generate(eq35->domain(p));
            expect(terms_to_plain(dom.terms) == "0/1 1/4 1/3", "eq35 domain mismatch");
            const MapApplication app = apply_map(*eq35, p, dom);
            expect(terms_to_plain(app.images_in_domain_order) == "1/3 2/5 1/2",
                   "eq35 is not the order-preserving correspondence 0/1->1/3 1/4->2/5 1/3->1/2");
        } else if (i == 1) {
            const MapEntry* eq47 = find_entry("eq47");
            expect(eq47 != nullptr, "eq47 missing from registry");
            const FareySeq dom = generate(eq47->domain(p));
            const MapApplication app = apply_map(*eq47, p, dom);
            expect(terms_to_plain(app.images_in_domain_order) == "1/2 2/5 1/3",
                   "eq47 is not the order-reversing correspondence onto (1/3,2/5,1/2)");
            expect(terms_to_plain(app.image.terms) == "1/3 2/5 1/2",
                   "eq47 image differs from eq35 image");
        } else {
            const MapEntry* eq60 = find_entry("eq60");
            expect(eq60 != nullptr, "eq60 missing from registry");
            expect(mat_mul(eq60->matrix, eq60->matrix) == Mat2::identity(),
                   "eq60 matrix is not involutory");
            const MapVerification v = verify_map(*eq60, p);
            expect(v.fixed_point && *v.fixed_point == Frac(2, 5),
                   "eq60 fixed point is not 2/5");
        }
    });
    return result;
}

SuiteResult run_word_pairs(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "word-pairs";
    struct Case {
        LRWord wm, wn;
        std::int64_t m, n;
    };
    std::vector<Case> cases;
    for (std::int64_t s = 0; s <= b.pair_max_s; ++s) {
        const std::vector<LRWord> words = LRWord::all_of_length(s);
        for (std::int64_t m = 1; m <= b.pair_max_m; ++m) {
            const std::int64_t n = m << s;
            for (const LRWord& wm : words)
                for (const LRWord& wn : words) cases.push_back({wm, wn, m, n});
        }
    }
    sweep(result, static_cast<std::int64_t>(cases.size()), parallel, [&](std::int64_t i) {
        const Case& c = cases[static_cast<std::size_t>(i)];
        verify_handle(word_pair_preserving_map(c.wm, c.wn, c.m, c.n));
        const MapHandle rev = word_pair_reversing_map(c.wm, c.wn, c.m, c.n);
        const VerificationReport report = verify_handle(rev);
        if (c.wm.letters == c.wn.letters) {
            expect(mat_mul(rev.matrix, rev.matrix) == Mat2::identity(),
                   rev.label + ": M*J*M^-1 is not involutory");
            if (c.m > 1)
                expect(report.fixed_point_checked,
                       rev.label + ": fixed point M*(1/2) unchecked");
        }
    });
    return result;
}

SuiteResult run_word_injections(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "word-injections";
    struct Case {
        LRWord w;
        std::int64_t m, n;
    };
    std::vector<Case> cases;
    for (std::int64_t s = 1; s <= b.injection_max_s; ++s)
        for (const LRWord& w : LRWord::all_of_length(s))
            for (std::int64_t m = 1; m <= b.injection_max_m; ++m) cases.push_back({w, m, m << s});
    sweep(result, static_cast<std::int64_t>(cases.size()), parallel, [&](std::int64_t i) {
        const Case& c = cases[static_cast<std::size_t>(i)];
        const MapHandle handle = word_injection(c.w, c.m, c.n);
        verify_handle(handle);
        const FareySeq image = generate(SeqSpec::mat_image(handle.matrix, handle.domain));
        neighbor_check(image);
        // Containment in the realized F_n, not just the membership predicate.
        const FareySeq ambient = generate(SeqSpec::full(c.n));
        for (const Frac& t : image.terms)
            expect(std::binary_search(ambient.terms.begin(), ambient.terms.end(), t),
                   handle.label + ": " + t.str() + " not a term of F_" + std::to_string(c.n));
    });
    return result;
}

SuiteResult run_power_identities(const Bounds& b) {
    SuiteResult result;
    result.name = "power-identities";
    const Mat2 L = Mat2::lower();
    const Mat2 R = Mat2::upper();
    const Mat2 J = Mat2::complement();
    const std::int64_t range = b.power_range;
    const std::int64_t width = 2 * range + 1;
    sweep(result, width * width, false, [&](std::int64_t idx) {
        const std::int64_t i = idx / width - range;
        const std::int64_t j = idx % width - range;
        const auto check = [&](const Mat2& got, std::int64_t a, std::int64_t bb, std::int64_t c,
                               std::int64_t d, const char* what) {
            expect(got == Mat2(a, bb, c, d), std::string(what) + " fails at i=" +
                                                 std::to_string(i) + " j=" + std::to_string(j));
        };
        check(mat_pow(L, j), 1, 0, j, 1, "L^j");
        check(mat_pow(R, j), 1 - j, j, -j, 1 + j, "R^j");
        check(mat_mul(mat_pow(L, i), mat_pow(R, j)), 1 - j, j, i - j - i * j, 1 + j + i * j,
              "L^i*R^j");
        check(mat_mul(mat_pow(R, i), mat_pow(L, j)), 1 - i + i * j, i, -i + j + i * j, 1 + i,
              "R^i*L^j");
        check(mat_mul(mat_pow(L, i), J), -1, 1, -i, 1 + i, "L^i*J");
        check(mat_mul(mat_pow(R, i), J), -1 + i, 1, i, 1, "R^i*J");
        check(mat_mul(J, mat_pow(L, j)), -1 + j, 1, j, 1, "J*L^j");
        check(mat_mul(J, mat_pow(R, j)), -1, 1, -j, 1 + j, "J*R^j");
    });
    return result;
}

SuiteResult run_word_swap(const Bounds& b, bool parallel) {
    SuiteResult result;
    result.name = "word-swap";
    struct Case {
        LRWord w;
        std::int64_t m;
    };
    std::vector<Case> cases;
    for (std::int64_t len = 0; len <= b.swap_max_len; ++len)
        for (const LRWord& w : LRWord::all_of_length(len))
            for (std::int64_t m = 1; m <= b.swap_max_m; ++m) cases.push_back({w, m});
    sweep(result, static_cast<std::int64_t>(cases.size()), parallel, [&](std::int64_t i) {
        const Case& c = cases[static_cast<std::size_t>(i)];
        verify_handle(word_complement_map(c.w, c.m));
    });
    return result;
}

std::vector<SuiteResult> run_all(const Bounds& b, bool parallel) {
    std::vector<SuiteResult> suites;
    suites.push_back(run_golden_sequences());
    suites.push_back(run_counting(b, parallel));
    suites.push_back(run_family_counts(b, parallel));
    suites.push_back(run_identity_laws(b, parallel));
    suites.push_back(run_registry(b, parallel));
    suites.push_back(run_mapped_triples());
    suites.push_back(run_word_pairs(b, parallel));
    suites.push_back(run_word_injections(b, parallel));
    suites.push_back(run_power_identities(b));
    suites.push_back(run_word_swap(b, parallel));
    return suites;
}

} // namespace farey::sweeps

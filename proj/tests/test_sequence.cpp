#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "farey/counting.hpp"
#include "farey/sequence.hpp"
#include "oracles.hpp"

using farey::Frac;
using farey::FareySeq;
using farey::SeqSpec;

namespace {

std::vector<Frac> to_fracs(const std::vector<oracle::Pair>& pairs) {
    std::vector<Frac> out;
    for (const auto& [h, k] : pairs) out.emplace_back(h, k);
    return out;
}

} // namespace

TEST_CASE("next_term walks F_6") {
    CHECK(farey::next_term(6, Frac(0, 1), Frac(1, 6)) == Frac(1, 5));
    CHECK(farey::next_term(6, Frac(3, 4), Frac(4, 5)) == Frac(5, 6));
    CHECK_THROWS_AS(farey::next_term(6, Frac(5, 6), Frac(1, 1)), farey::DomainError);
}

TEST_CASE("golden sequences") {
    CHECK(farey::terms_to_plain(farey::generate(SeqSpec::full(6)).terms) ==
          "0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 5/6 1/1");
    CHECK(farey::terms_to_plain(farey::generate(SeqSpec::boolean(6, 4)).terms) ==
          "0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1");
    CHECK(farey::terms_to_plain(farey::generate(SeqSpec::full(1)).terms) == "0/1 1/1");
    CHECK(farey::terms_to_plain(farey::generate(SeqSpec::boolean(8, 4)).terms) ==
          "0/1 1/5 1/4 1/3 2/5 3/7 1/2 4/7 3/5 2/3 3/4 4/5 1/1");
}

TEST_CASE("recurrence equals enumeration for every order up to 200") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto by_recurrence = farey::full_sequence_recurrence(n);
        CHECK(by_recurrence == to_fracs(oracle::farey(n)));
        if (n % 50 == 0) {
            CHECK(by_recurrence == farey::full_sequence_enumerate(n, false));
            CHECK(by_recurrence == farey::full_sequence_enumerate(n, true));
        }
    }
}

TEST_CASE("streaming matches materialization") {
    farey::FareyStream stream(8);
    std::vector<Frac> collected;
    while (auto t = stream.next()) collected.push_back(*t);
    CHECK(collected == farey::generate(SeqSpec::full(8)).terms);

    farey::FareyStream tiny(1);
    CHECK(*tiny.next() == Frac(0, 1));
    CHECK(*tiny.next() == Frac(1, 1));
    CHECK(!tiny.next());
}

TEST_CASE("streaming counts a large order without materializing") {
    farey::FareyStream stream(3000);
    std::int64_t count = 0;
    while (stream.next()) ++count;
    CHECK(count == farey::cardinality_full_recursive(3000));
}

TEST_CASE("filter families match the oracle predicates") {
    for (std::int64_t n = 2; n <= 40; ++n) {
        for (std::int64_t m = 1; m <= n - 1; m += 2) {
            CHECK(farey::generate(SeqSpec::f_upper(n, m)).terms ==
                  to_fracs(oracle::f_upper(n, m)));
            CHECK(farey::generate(SeqSpec::g_lower(n, m)).terms ==
                  to_fracs(oracle::g_lower(n, m)));
            CHECK(farey::generate(SeqSpec::boolean(n, m)).terms ==
                  to_fracs(oracle::boolean(n, m)));
        }
    }
}

TEST_CASE("generated sequences are strictly increasing with endpoints in place") {
    for (std::int64_t n = 2; n <= 30; ++n) {
        for (std::int64_t m = 1; m <= n - 1; ++m) {
            const FareySeq seq = farey::generate(SeqSpec::boolean(n, m));
            REQUIRE(seq.size() >= 2);
            CHECK(seq.terms.front() == Frac(0, 1));
            CHECK(seq.terms.back() == Frac(1, 1));
            for (std::int64_t i = 0; i + 1 < seq.size(); ++i)
                CHECK(seq.terms[static_cast<std::size_t>(i)] <
                      seq.terms[static_cast<std::size_t>(i) + 1]);
        }
    }
}

TEST_CASE("consecutive full-sequence terms are unimodular") {
    const auto terms = farey::generate(SeqSpec::full(50)).terms;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        CHECK(terms[i + 1].num() * terms[i].den() - terms[i].num() * terms[i + 1].den() == 1);
}

TEST_CASE("half restrictions split F(B(2m),m) at 1/2") {
    for (std::int64_t m = 1; m <= 50; ++m) {
        const SeqSpec base = SeqSpec::boolean(2 * m, m);
        const auto whole = farey::generate(base).terms;
        const auto low = farey::generate(SeqSpec::half_low(base)).terms;
        const auto high = farey::generate(SeqSpec::half_high(base)).terms;
        CHECK(low.back() == Frac(1, 2));
        CHECK(high.front() == Frac(1, 2));
        // Union re-assembles the whole sequence, overlapping exactly at 1/2.
        std::vector<Frac> joined = low;
        joined.insert(joined.end(), high.begin() + 1, high.end());
        CHECK(joined == whole);
    }
}

TEST_CASE("nested matrix images compose") {
    const farey::Mat2 L = farey::Mat2::lower();
    const auto nested = farey::generate(
        SeqSpec::mat_image(L, SeqSpec::mat_image(L, SeqSpec::full(3))));
    const auto direct =
        farey::generate(SeqSpec::mat_image(farey::mat_mul(L, L), SeqSpec::full(3)));
    CHECK(nested.terms == direct.terms);
}

TEST_CASE("matrix images sort ascending and record reversals") {
    const FareySeq up = farey::generate(
        SeqSpec::mat_image(farey::Mat2(1, 0, 2, 1), SeqSpec::full(2)));
    CHECK(!up.reversed_by_matrix);
    CHECK(farey::terms_to_plain(up.terms) == "0/1 1/4 1/3");

    const FareySeq down = farey::generate(
        SeqSpec::mat_image(farey::Mat2::complement(), SeqSpec::full(6)));
    CHECK(down.reversed_by_matrix);
    CHECK(down.terms == farey::generate(SeqSpec::full(6)).terms);
}

TEST_CASE("spec validation and caps") {
    CHECK_THROWS_AS(farey::generate(SeqSpec::full(0)), farey::SpecError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::boolean(6, 6)), farey::SpecError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::boolean(6, 0)), farey::SpecError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::bool_f(6, 4, 5)), farey::SpecError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::bool_g(6, 4, 3)), farey::SpecError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::full(1001), 1000), farey::CapError);
    CHECK_THROWS_AS(farey::generate(SeqSpec::half_low(SeqSpec::full(1001)), 1000),
                    farey::CapError);
}

TEST_CASE("identity laws at the documented parameter points") {
    CHECK(farey::check_identity_laws(6, 4).total() > 0);
    CHECK(farey::check_identity_laws(2, 1).total() > 0);
    const farey::IdentityReport r = farey::check_identity_laws(20, 7);
    CHECK(r.f_reduction_checks == 7);
    CHECK(r.g_reduction_checks == 13);
    CHECK(r.cross_checks == 7 * 13);
    CHECK_THROWS_AS(farey::check_identity_laws(6, 6), farey::SpecError);
}

TEST_CASE("F_2 equals F(B(2),1)") {
    CHECK(farey::generate(SeqSpec::full(2)).terms ==
          farey::generate(SeqSpec::boolean(2, 1)).terms);
}

TEST_CASE("neighbor scan") {
    CHECK(farey::neighbor_check(farey::generate(SeqSpec::full(6))).triples_checked == 11);

    FareySeq triple{SeqSpec::full(8), {Frac(1, 3), Frac(2, 5), Frac(1, 2)}};
    CHECK(farey::neighbor_check(triple).triples_checked == 1);

    FareySeq wedge{SeqSpec::full(3), {Frac(0, 1), Frac(1, 3), Frac(1, 2)}};
    CHECK(farey::neighbor_check(wedge).triples_checked == 1);

    // 0/1 -> 2/5 has determinant 2.
    FareySeq bad{SeqSpec::full(5), {Frac(0, 1), Frac(2, 5), Frac(1, 2)}};
    CHECK_THROWS_AS(farey::neighbor_check(bad), farey::NeighborViolation);

    FareySeq two{SeqSpec::full(1), {Frac(0, 1), Frac(1, 1)}};
    CHECK(farey::neighbor_check(two).triples_checked == 0);
}

TEST_CASE("plain round trip") {
    const auto terms = farey::generate(SeqSpec::full(7)).terms;
    CHECK(farey::parse_terms(farey::terms_to_plain(terms)) == terms);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "farey/matrix.hpp"
#include "oracles.hpp"

using farey::Frac;
using farey::Mat2;

TEST_CASE("only unimodular matrices construct") {
    CHECK(Mat2(1, 0, 1, 1).det() == 1);
    CHECK(Mat2(-1, 1, 0, 1).det() == -1);
    CHECK_THROWS_AS(Mat2(1, 0, 0, 2), farey::DomainError);
    CHECK_THROWS_AS(Mat2(0, 0, 0, 0), farey::DomainError);
}

TEST_CASE("apply") {
    CHECK(farey::mat_apply(Mat2::complement(), Frac(1, 3)) == Frac(2, 3));
    CHECK(farey::mat_apply(Mat2(1, 0, 2, 1), Frac(1, 1)) == Frac(1, 3));
    CHECK(farey::mat_apply(Mat2(-2, 1, -7, 3), Frac(0, 1)) == Frac(1, 3));
    // [[1,0],[-1,1]] sends 2/3 to 2/1, outside [0,1].
    CHECK_THROWS_AS(farey::mat_apply(Mat2(1, 0, -1, 1), Frac(2, 3)), farey::OutOfDomainError);
    // R^-1 sends [0,1] to [-1,0], outside the fraction cone.
    CHECK_THROWS_AS(farey::mat_apply(Mat2(2, -1, 1, 0), Frac(0, 1)), farey::OutOfDomainError);
}

TEST_CASE("multiply, invert, power") {
    const Mat2 L = Mat2::lower();
    const Mat2 R = Mat2::upper();
    CHECK(farey::mat_mul(L, R) == Mat2(0, 1, -1, 3));
    CHECK(farey::mat_mul(R, L) == Mat2(1, 1, 1, 2));
    CHECK(farey::mat_mul(Mat2::identity(), Mat2(3, -2, 8, -5)) == Mat2(3, -2, 8, -5));

    CHECK(farey::mat_inv(L) == Mat2(1, 0, -1, 1));
    CHECK(farey::mat_inv(R) == Mat2(2, -1, 1, 0));
    CHECK(farey::mat_inv(Mat2::identity()) == Mat2::identity());
    // An odd-determinant-sign case: inverse of J is J.
    CHECK(farey::mat_inv(Mat2::complement()) == Mat2::complement());

    CHECK(farey::mat_pow(L, 5) == Mat2(1, 0, 5, 1));
    CHECK(farey::mat_pow(R, 3) == Mat2(-2, 3, -3, 4));
    CHECK(farey::mat_pow(Mat2(3, -2, 8, -5), 0) == Mat2::identity());
    CHECK(farey::mat_pow(L, -4) == Mat2(1, 0, -4, 1));
}

TEST_CASE("inverse is a two-sided inverse for a spread of unimodular matrices") {
    const Mat2 samples[] = {Mat2::lower(),     Mat2::upper(),      Mat2::complement(),
                            Mat2(-2, 1, -7, 3), Mat2(3, -2, 8, -5), Mat2(1, 0, 5, -1),
                            Mat2(-4, 3, -5, 4)};
    for (const Mat2& m : samples) {
        CHECK(farey::mat_mul(m, farey::mat_inv(m)) == Mat2::identity());
        CHECK(farey::mat_mul(farey::mat_inv(m), m) == Mat2::identity());
    }
}

TEST_CASE("closed forms for powers and mixed products, exponents in [-10, 10]") {
    const Mat2 L = Mat2::lower();
    const Mat2 R = Mat2::upper();
    const Mat2 J = Mat2::complement();
    for (std::int64_t i = -10; i <= 10; ++i) {
        CHECK(farey::mat_pow(L, i) == Mat2(1, 0, i, 1));
        CHECK(farey::mat_pow(R, i) == Mat2(1 - i, i, -i, 1 + i));
        CHECK(farey::mat_mul(farey::mat_pow(L, i), J) == Mat2(-1, 1, -i, 1 + i));
        CHECK(farey::mat_mul(farey::mat_pow(R, i), J) == Mat2(-1 + i, 1, i, 1));
        CHECK(farey::mat_mul(J, farey::mat_pow(L, i)) == Mat2(-1 + i, 1, i, 1));
        CHECK(farey::mat_mul(J, farey::mat_pow(R, i)) == Mat2(-1, 1, -i, 1 + i));
        for (std::int64_t j = -10; j <= 10; ++j) {
            CHECK(farey::mat_mul(farey::mat_pow(L, i), farey::mat_pow(R, j)) ==
                  Mat2(1 - j, j, i - j - i * j, 1 + j + i * j));
            CHECK(farey::mat_mul(farey::mat_pow(R, i), farey::mat_pow(L, j)) ==
                  Mat2(1 - i + i * j, i, -i + j + i * j, 1 + i));
            // Three-factor products through the complement matrix.
            const Mat2 LJR = farey::mat_mul(farey::mat_pow(L, i),
                                            farey::mat_mul(J, farey::mat_pow(R, j)));
            CHECK(LJR == Mat2(-1, 1, -i - j, 1 + i + j));
            const Mat2 RJL = farey::mat_mul(farey::mat_pow(R, i),
                                            farey::mat_mul(J, farey::mat_pow(L, j)));
            CHECK(RJL == Mat2(-1 + i + j, 1, i + j, 1));
            const Mat2 LJL = farey::mat_mul(farey::mat_pow(L, i),
                                            farey::mat_mul(J, farey::mat_pow(L, j)));
            CHECK(LJL == Mat2(-1 + j, 1, -i + j + i * j, 1 + i));
            const Mat2 RJR = farey::mat_mul(farey::mat_pow(R, i),
                                            farey::mat_mul(J, farey::mat_pow(R, j)));
            CHECK(RJR == Mat2(-1 + i - i * j, 1 + i * j, i - j - i * j, 1 + j + i * j));
        }
    }
}

TEST_CASE("complement is an involution on all of F_20") {
    const Mat2 J = Mat2::complement();
    for (const auto& [h, k] : oracle::farey(20)) {
        const Frac x(h, k);
        CHECK(farey::mat_apply(J, farey::mat_apply(J, x)) == x);
        CHECK(farey::mat_apply(J, x) == Frac(k - h, k));
    }
}

TEST_CASE("random letter products: direction matches the determinant sign") {
    // Deterministic LCG; portable across platforms.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    const auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    const auto terms = oracle::farey(12);
    for (int trial = 0; trial < 200; ++trial) {
        // A word in L, R, optionally followed by J, applied to all of F_12.
        Mat2 m;
        const int len = 1 + static_cast<int>(next() % 4);
        for (int i = 0; i < len; ++i)
            m = farey::mat_mul(m, next() % 2 ? Mat2::lower() : Mat2::upper());
        if (next() % 2) m = farey::mat_mul(m, Mat2::complement());

        const std::int64_t det = m.det();
        Frac prev_out = farey::mat_apply(m, Frac(0, 1));
        for (std::size_t i = 1; i < terms.size(); ++i) {
            const Frac in(terms[i].first, terms[i].second);
            const Frac out = farey::mat_apply(m, in);
            CHECK(oracle::gcd(out.num(), out.den()) == 1);
            if (det == 1) CHECK(prev_out < out);
            else CHECK(out < prev_out);
            // Inverse round-trips.
            CHECK(farey::mat_apply(farey::mat_inv(m), out) == in);
            prev_out = out;
        }
    }
}

TEST_CASE("unimodular images stay irreducible") {
    const Mat2 samples[] = {Mat2::lower(), Mat2(1, 1, 1, 2), Mat2(-1, 1, -2, 3)};
    for (const Mat2& m : samples) {
        for (const auto& [h, k] : oracle::farey(15)) {
            const Frac img = farey::mat_apply(m, Frac(h, k));
            CHECK(oracle::gcd(img.num(), img.den()) == 1);
        }
    }
}

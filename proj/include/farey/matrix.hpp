#pragma once

#include <cstdint>
#include <string>

#include "farey/checked.hpp"
#include "farey/errors.hpp"
#include "farey/fraction.hpp"

namespace farey {

// A 2x2 integer matrix [[a,b],[c,d]] with determinant +1 or -1.
// Acting on column vectors [h,k], it carries irreducible fractions to
// irreducible fractions.
class Mat2 {
  public:
    Mat2() : a_(1), b_(0), c_(0), d_(1) {}

    Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
        : a_(a), b_(b), c_(c), d_(d) {
        const std::int64_t det = this->det();
        if (det != 1 && det != -1) throw DomainError("matrix determinant must be +1 or -1");
    }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    std::int64_t det() const {
        return checked_sub(checked_mul(a_, d_), checked_mul(b_, c_));
    }

    static Mat2 identity() { return Mat2(); }
    // The two letter matrices of the LR words and the complement involution.
    static Mat2 lower() { return Mat2(1, 0, 1, 1); }     // L
    static Mat2 upper() { return Mat2(0, 1, -1, 2); }    // R
    static Mat2 complement() { return Mat2(-1, 1, 0, 1); } // J : h/k -> (k-h)/k

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const {
        return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" +
               std::to_string(c_) + "," + std::to_string(d_) + "]]";
    }

  private:
    std::int64_t a_, b_, c_, d_;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return Mat2(checked_add(checked_mul(x.a(), y.a()), checked_mul(x.b(), y.c())),
                checked_add(checked_mul(x.a(), y.b()), checked_mul(x.b(), y.d())),
                checked_add(checked_mul(x.c(), y.a()), checked_mul(x.d(), y.c())),
                checked_add(checked_mul(x.c(), y.b()), checked_mul(x.d(), y.d())));
}

// Exact inverse; integer because |det| = 1.
inline Mat2 mat_inv(const Mat2& m) {
    if (m.det() == 1) return Mat2(m.d(), -m.b(), -m.c(), m.a());
    return Mat2(-m.d(), m.b(), m.c(), -m.a());
}

// j-fold product; j = 0 gives the identity, negative j exponentiates the inverse.
inline Mat2 mat_pow(const Mat2& m, std::int64_t j) {
    Mat2 base = j < 0 ? mat_inv(m) : m;
    std::int64_t n = j < 0 ? -j : j;
    Mat2 acc;
    while (n-- > 0) acc = mat_mul(acc, base);
    return acc;
}

// Applies m to the column vector [h,k]. The image must again be a fraction
// in [0,1] with positive denominator; anything else means the matrix was used
// outside its map's declared domain.
inline Frac mat_apply(const Mat2& m, const Frac& x) {
    const std::int64_t h = checked_add(checked_mul(m.a(), x.num()), checked_mul(m.b(), x.den()));
    const std::int64_t k = checked_add(checked_mul(m.c(), x.num()), checked_mul(m.d(), x.den()));
    if (k < 1 || h < 0 || h > k)
        throw OutOfDomainError("matrix " + m.str() + " maps " + x.str() + " to " +
                               std::to_string(h) + "/" + std::to_string(k) +
                               ", outside [0, 1]");
    return Frac(h, k); // already irreducible: |det| = 1 preserves the gcd
}

} // namespace farey

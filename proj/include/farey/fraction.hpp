#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "farey/checked.hpp"
#include "farey/errors.hpp"

namespace farey {

// An irreducible fraction h/k with k >= 1 and 0 <= h <= k.
// Always stored reduced; immutable value type.
class Frac {
  public:
    Frac() = default; // 0/1

    Frac(std::int64_t h, std::int64_t k) {
        if (k < 1) throw DomainError("fraction denominator must be >= 1");
        if (h < 0 || h > k) throw DomainError("fraction must lie in [0, 1]");
        const std::int64_t g = std::gcd(h, k);
        num_ = h / g;
        den_ = k / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static Frac zero() { return Frac(0, 1); }
    static Frac one() { return Frac(1, 1); }
    static Frac half() { return Frac(1, 2); }

    // Cross-multiplication in 128 bits; no overflow for any int64 operands.
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    // Parses "h/k"; rejects anything that is not an in-range fraction.
    static Frac parse(const std::string& text);

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Reduced mediant (h1+h2)/(k1+k2). For Farey neighbors this is the term between them.
inline Frac mediant(const Frac& x, const Frac& y) {
    return Frac(checked_add(x.num(), y.num()), checked_add(x.den(), y.den()));
}

} // namespace farey

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "farey/errors.hpp"
#include "farey/fraction.hpp"
#include "farey/matrix.hpp"

namespace farey {

// Descriptor for one sequence family.
//
//   Full(n)          F_n, the Farey sequence of order n
//   FUpper(n,m)      F_n^m        = (h/k in F_n : h <= m)
//   GLower(n,m)      G_n^m        = (h/k in F_n : m+k-n <= h)
//   Bool(n,m)        F(B(n),m)    = F_n^m  intersect  G_n^m
//   BoolF(n,m,l)     F(B(n),m)^l  = (h/k in F(B(n),m) : h <= l)
//   BoolG(n,m,l)     G(B(n),m)^l  = (h/k in F(B(n),m) : l+k-n <= h)
//   HalfLow(inner)   restriction of inner to terms <= 1/2
//   HalfHigh(inner)  restriction of inner to terms >= 1/2
//   MatImage(M,inner) the termwise image M*inner, normalized ascending
enum class Family {
    Full,
    FUpper,
    GLower,
    Bool,
    BoolF,
    BoolG,
    HalfLow,
    HalfHigh,
    MatImage,
};

class SeqSpec {
  public:
    SeqSpec() : SeqSpec(Family::Full, 1, 0, 0) {} // F_1

    static SeqSpec full(std::int64_t n) { return SeqSpec(Family::Full, n, 0, 0); }
    static SeqSpec f_upper(std::int64_t n, std::int64_t m) {
        return SeqSpec(Family::FUpper, n, m, 0);
    }
    static SeqSpec g_lower(std::int64_t n, std::int64_t m) {
        return SeqSpec(Family::GLower, n, m, 0);
    }
    static SeqSpec boolean(std::int64_t n, std::int64_t m) {
        return SeqSpec(Family::Bool, n, m, 0);
    }
    static SeqSpec bool_f(std::int64_t n, std::int64_t m, std::int64_t l) {
        return SeqSpec(Family::BoolF, n, m, l);
    }
    static SeqSpec bool_g(std::int64_t n, std::int64_t m, std::int64_t l) {
        return SeqSpec(Family::BoolG, n, m, l);
    }
    static SeqSpec half_low(SeqSpec inner) { return wrap(Family::HalfLow, std::move(inner)); }
    static SeqSpec half_high(SeqSpec inner) { return wrap(Family::HalfHigh, std::move(inner)); }
    static SeqSpec mat_image(const Mat2& m, SeqSpec inner) {
        SeqSpec s = wrap(Family::MatImage, std::move(inner));
        s.mat_ = m;
        return s;
    }

    Family family() const { return family_; }
    std::int64_t n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t l() const { return l_; }
    const Mat2& matrix() const { return mat_; }
    const SeqSpec& inner() const { return *inner_; }

    bool is_filter_family() const {
        return family_ != Family::MatImage;
    }

    // Order of the Farey sequence this descriptor filters down from.
    std::int64_t base_order() const {
        if (inner_) return inner_->base_order();
        return n_;
    }

    // Throws SpecError unless the parameter invariants hold.
    void validate() const;

    // Membership predicate; defined for every family except MatImage
    // (images are constructed, not filtered).
    bool contains(const Frac& x) const;

    std::string name() const;

    friend bool operator==(const SeqSpec& a, const SeqSpec& b);
    friend bool operator!=(const SeqSpec& a, const SeqSpec& b) { return !(a == b); }

  private:
    SeqSpec(Family f, std::int64_t n, std::int64_t m, std::int64_t l)
        : family_(f), n_(n), m_(m), l_(l) {}

    static SeqSpec wrap(Family f, SeqSpec inner) {
        SeqSpec s(f, 0, 0, 0);
        s.inner_ = std::make_shared<const SeqSpec>(std::move(inner));
        return s;
    }

    Family family_;
    std::int64_t n_, m_, l_;
    Mat2 mat_;
    std::shared_ptr<const SeqSpec> inner_;
};

std::string family_name(Family f);

} // namespace farey

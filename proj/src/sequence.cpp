#include "farey/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "farey/checked.hpp"

namespace farey {

Frac next_term(std::int64_t n, const Frac& prev, const Frac& cur) {
    if (n < 1) throw DomainError("order must be >= 1");
    if (cur == Frac::one()) throw DomainError("1/1 has no successor");
    const std::int64_t a = (prev.den() + n) / cur.den();
    return Frac(checked_sub(checked_mul(a, cur.num()), prev.num()),
                checked_sub(checked_mul(a, cur.den()), prev.den()));
}

FareyStream::FareyStream(std::int64_t n) : n_(n) {
    if (n < 1) throw DomainError("order must be >= 1");
}

std::optional<Frac> FareyStream::next() {
    if (!cur_) {
        cur_ = Frac::zero();
        return cur_;
    }
    if (*cur_ == Frac::one()) return std::nullopt;
    Frac nxt = prev_ ? next_term(n_, *prev_, *cur_) : Frac(1, n_);
    prev_ = cur_;
    cur_ = nxt;
    return cur_;
}

std::vector<Frac> full_sequence_recurrence(std::int64_t n) {
    std::vector<Frac> terms;
    // |F_n| ~ 3n^2/pi^2; reserve a little above that.
    terms.reserve(static_cast<std::size_t>(0.305 * static_cast<double>(n) * static_cast<double>(n)) + 8);
    FareyStream stream(n);
    while (auto t = stream.next()) terms.push_back(*t);
    return terms;
}

std::vector<Frac> full_sequence_enumerate(std::int64_t n, bool parallel) {
    if (n < 1) throw DomainError("order must be >= 1");
    std::vector<Frac> terms;
    terms.push_back(Frac::zero());
    terms.push_back(Frac::one());
#pragma omp parallel if (parallel)
    {
        std::vector<Frac> local;
#pragma omp for nowait schedule(dynamic, 64)
        for (std::int64_t k = 2; k <= n; ++k) {
            for (std::int64_t h = 1; h < k; ++h) {
                if (std::gcd(h, k) == 1) local.emplace_back(h, k);
            }
        }
#pragma omp critical
        terms.insert(terms.end(), local.begin(), local.end());
    }
    std::sort(terms.begin(), terms.end());
    return terms;
}

namespace {

std::vector<Frac> filter_terms(const std::vector<Frac>& terms, const SeqSpec& spec) {
    std::vector<Frac> out;
    for (const Frac& t : terms)
        if (spec.contains(t)) out.push_back(t);
    return out;
}

} // namespace

FareySeq generate(const SeqSpec& spec, std::int64_t cap) {
    spec.validate();
    if (spec.base_order() > cap)
        throw CapError("order " + std::to_string(spec.base_order()) + " exceeds cap " +
                       std::to_string(cap));

    switch (spec.family()) {
        case Family::Full:
            return FareySeq{spec, full_sequence_recurrence(spec.n())};
        case Family::FUpper:
        case Family::GLower:
        case Family::Bool:
        case Family::BoolF:
        case Family::BoolG:
            return FareySeq{spec, filter_terms(full_sequence_recurrence(spec.n()), spec)};
        case Family::HalfLow:
        case Family::HalfHigh: {
            FareySeq base = generate(spec.inner(), cap);
            std::vector<Frac> out;
            const Frac half = Frac::half();
            for (const Frac& t : base.terms) {
                if (spec.family() == Family::HalfLow ? t <= half : t >= half) out.push_back(t);
            }
            return FareySeq{spec, std::move(out), base.reversed_by_matrix};
        }
        case Family::MatImage: {
            FareySeq base = generate(spec.inner(), cap);
            std::vector<Frac> out;
            out.reserve(base.terms.size());
            for (const Frac& t : base.terms) out.push_back(mat_apply(spec.matrix(), t));
            bool reversed = out.size() >= 2 && out[1] < out[0];
            if (reversed) std::reverse(out.begin(), out.end());
            for (std::size_t i = 0; i + 1 < out.size(); ++i) {
                if (!(out[i] < out[i + 1]))
                    throw OutOfDomainError("matrix " + spec.matrix().str() +
                                           " is not monotone on " + spec.inner().name());
            }
            return FareySeq{spec, std::move(out), reversed};
        }
    }
    throw SpecError("unknown family"); // unreachable
}

namespace {

// Lazily generated F_1 .. F_n shared by all laws of one check.
class FullCache {
  public:
    explicit FullCache(std::int64_t n) : seqs_(static_cast<std::size_t>(n) + 1) {}
    const std::vector<Frac>& get(std::int64_t order) {
        auto& slot = seqs_[static_cast<std::size_t>(order)];
        if (!slot) slot = full_sequence_recurrence(order);
        return *slot;
    }

  private:
    std::vector<std::optional<std::vector<Frac>>> seqs_;
};

std::vector<Frac> filter_with(const std::vector<Frac>& terms, const SeqSpec& spec) {
    std::vector<Frac> out;
    for (const Frac& t : terms)
        if (spec.contains(t)) out.push_back(t);
    return out;
}

[[noreturn]] void violation(const std::string& law, std::int64_t n, std::int64_t m,
                            const std::string& detail) {
    throw IdentityViolation("identity law \"" + law + "\" fails at n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + (detail.empty() ? "" : " " + detail));
}

} // namespace

IdentityReport check_identity_laws(std::int64_t n, std::int64_t m) {
    if (m < 1 || m > n - 1) throw SpecError("identity laws need 1 <= m <= n-1");
    IdentityReport report;
    report.n = n;
    report.m = m;

    FullCache cache(n);
    const std::vector<Frac>& full = cache.get(n);
    const std::vector<Frac> fupper = filter_with(full, SeqSpec::f_upper(n, m));
    const std::vector<Frac> glower = filter_with(full, SeqSpec::g_lower(n, m));
    const std::vector<Frac> boolnm = filter_with(full, SeqSpec::boolean(n, m));

    std::vector<Frac> merged;
    std::set_intersection(fupper.begin(), fupper.end(), glower.begin(), glower.end(),
                          std::back_inserter(merged));
    if (merged != boolnm) violation("F_n^m cap G_n^m = F(B(n),m)", n, m, "");
    report.intersection_checks = 1;

    merged.clear();
    std::set_union(fupper.begin(), fupper.end(), glower.begin(), glower.end(),
                   std::back_inserter(merged));
    if (merged != full) violation("F_n^m cup G_n^m = F_n", n, m, "");
    report.union_checks = 1;

    for (std::int64_t l = 1; l <= m; ++l) {
        const std::vector<Frac> lhs = filter_with(boolnm, SeqSpec::bool_f(n, m, l));
        const std::vector<Frac> rhs =
            filter_with(cache.get(n - m + l), SeqSpec::boolean(n - m + l, l));
        if (lhs != rhs)
            violation("F(B(n),m)^l = F(B(n-m+l),l)", n, m, "l=" + std::to_string(l));
        ++report.f_reduction_checks;
    }

    for (std::int64_t l = m; l <= n - 1; ++l) {
        const std::vector<Frac> lhs = filter_with(boolnm, SeqSpec::bool_g(n, m, l));
        const std::vector<Frac> rhs =
            filter_with(cache.get(n + m - l), SeqSpec::boolean(n + m - l, m));
        if (lhs != rhs)
            violation("G(B(n),m)^l = F(B(n+m-l),m)", n, m, "l=" + std::to_string(l));
        ++report.g_reduction_checks;
    }

    for (std::int64_t l = 1; l <= m; ++l) {
        for (std::int64_t lam = 1; lam <= n - m; ++lam) {
            std::vector<Frac> lhs;
            for (const Frac& t : boolnm) {
                // h <= l together with (n-lam)+k-n <= h.
                if (t.num() <= l && t.num() >= t.den() - lam) lhs.push_back(t);
            }
            const std::vector<Frac> rhs =
                filter_with(cache.get(l + lam), SeqSpec::boolean(l + lam, l));
            if (lhs != rhs)
                violation("F(B(n),m)^l cap G(B(n),m)^(n-lam) = F(B(l+lam),l)", n, m,
                          "l=" + std::to_string(l) + " lam=" + std::to_string(lam));
            ++report.cross_checks;
        }
    }

    return report;
}

NeighborReport neighbor_check(const FareySeq& seq) {
    NeighborReport report;
    const auto& t = seq.terms;
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        const std::int64_t det = checked_sub(checked_mul(t[j].den(), t[j + 1].num()),
                                             checked_mul(t[j].num(), t[j + 1].den()));
        if (det != 1)
            throw NeighborViolation("k_j*h_(j+1) - h_j*k_(j+1) = " + std::to_string(det) +
                                    " != 1 at index " + std::to_string(j) + " (" + t[j].str() +
                                    ", " + t[j + 1].str() + ")");
    }
    for (std::size_t j = 0; j + 2 < t.size(); ++j) {
        if (mediant(t[j], t[j + 2]) != t[j + 1])
            throw NeighborViolation("middle term " + t[j + 1].str() +
                                    " is not the reduced mediant of " + t[j].str() + " and " +
                                    t[j + 2].str() + " at index " + std::to_string(j));
        ++report.triples_checked;
    }
    return report;
}

std::string terms_to_plain(const std::vector<Frac>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ' ';
        out += terms[i].str();
    }
    return out;
}

std::vector<Frac> parse_terms(const std::string& plain) {
    std::vector<Frac> out;
    std::size_t i = 0;
    while (i < plain.size()) {
        while (i < plain.size() && std::isspace(static_cast<unsigned char>(plain[i]))) ++i;
        std::size_t j = i;
        while (j < plain.size() && !std::isspace(static_cast<unsigned char>(plain[j]))) ++j;
        if (j > i) out.push_back(Frac::parse(plain.substr(i, j - i)));
        i = j;
    }
    return out;
}

} // namespace farey

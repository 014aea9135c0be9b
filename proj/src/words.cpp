#include "farey/words.hpp"

#include <algorithm>

#include "farey/errors.hpp"

namespace farey {

LRWord LRWord::parse(const std::string& text) {
    std::vector<Letter> ls;
    ls.reserve(text.size());
    for (char c : text) {
        if (c == 'L' || c == 'l') ls.push_back(Letter::L);
        else if (c == 'R' || c == 'r') ls.push_back(Letter::R);
        else throw SpecError(std::string("word letters must be L or R, got '") + c + "'");
    }
    return LRWord(std::move(ls));
}

std::string LRWord::str() const {
    if (letters.empty()) return "-";
    std::string out;
    for (Letter l : letters) out += (l == Letter::L ? 'L' : 'R');
    return out;
}

LRWord LRWord::swapped() const {
    LRWord out = *this;
    for (Letter& l : out.letters) l = (l == Letter::L ? Letter::R : Letter::L);
    return out;
}

std::vector<LRWord> LRWord::all_of_length(std::int64_t len) {
    std::vector<LRWord> words;
    const std::int64_t count = std::int64_t{1} << len;
    words.reserve(static_cast<std::size_t>(count));
    for (std::int64_t bits = 0; bits < count; ++bits) {
        LRWord w;
        for (std::int64_t i = len - 1; i >= 0; --i)
            w.letters.push_back((bits >> i) & 1 ? Letter::R : Letter::L);
        words.push_back(std::move(w));
    }
    return words;
}

Mat2 letter_matrix(LRWord::Letter l) {
    return l == LRWord::Letter::L ? Mat2::lower() : Mat2::upper();
}

Mat2 word_matrix(const LRWord& w) {
    Mat2 acc;
    for (LRWord::Letter l : w.letters) acc = mat_mul(acc, letter_matrix(l));
    return acc;
}

namespace {

std::int64_t floor_log2_ratio(std::int64_t n, std::int64_t m) {
    std::int64_t s = 0;
    while (s + 1 < 62 && (m << (s + 1)) <= n) ++s;
    return s;
}

} // namespace

MapHandle word_injection(const LRWord& w, std::int64_t m, std::int64_t n) {
    if (m < 1) throw SpecError("order m must be >= 1");
    if (n < 2 * m) throw SpecError("word injection needs n >= 2m");
    if (w.length() != floor_log2_ratio(n, m))
        throw SpecError("word length " + std::to_string(w.length()) +
                        " != floor(log2(n/m)) = " + std::to_string(floor_log2_ratio(n, m)));
    const Mat2 product = word_matrix(w);
    MapHandle handle;
    handle.matrix = product;
    handle.domain = SeqSpec::full(m);
    SeqSpec image = SeqSpec::mat_image(product, SeqSpec::full(m));
    handle.codomain = w.letters.front() == LRWord::Letter::L ? SeqSpec::half_low(image)
                                                             : SeqSpec::half_high(image);
    handle.direction = Direction::Preserving;
    handle.injectivity = Injectivity::Bijective; // onto its own image by construction
    handle.container = SeqSpec::full(n);
    handle.label = "word " + w.str() + " : F_" + std::to_string(m) + " -> F_" +
                   std::to_string(n);
    return handle;
}

MapHandle word_pair_preserving_map(const LRWord& wm, const LRWord& wn,
                                   std::int64_t m, std::int64_t n) {
    if (m < 1) throw SpecError("order m must be >= 1");
    if (wm.length() != wn.length()) throw SpecError("word lengths differ");
    if (n < m || wm.length() != floor_log2_ratio(n, m))
        throw SpecError("word length != floor(log2(n/m))");
    const Mat2 mat_m = word_matrix(wm);
    const Mat2 mat_n = word_matrix(wn);
    MapHandle handle;
    handle.matrix = mat_mul(mat_n, mat_inv(mat_m));
    handle.domain = SeqSpec::mat_image(mat_m, SeqSpec::full(m));
    handle.codomain = SeqSpec::mat_image(mat_n, SeqSpec::full(m));
    handle.direction = Direction::Preserving;
    handle.injectivity = Injectivity::Bijective;
    handle.container = SeqSpec::full(n);
    handle.degenerate = wm.empty();
    handle.label = "N*M^-1 for M=" + wm.str() + " N=" + wn.str() + " m=" + std::to_string(m);
    return handle;
}

MapHandle word_pair_reversing_map(const LRWord& wm, const LRWord& wn,
                                  std::int64_t m, std::int64_t n) {
    MapHandle handle = word_pair_preserving_map(wm, wn, m, n);
    const Mat2 mat_m = word_matrix(wm);
    handle.matrix = mat_mul(word_matrix(wn), mat_mul(Mat2::complement(), mat_inv(mat_m)));
    handle.direction = Direction::Reversing;
    handle.label = "N*J*M^-1 for M=" + wm.str() + " N=" + wn.str() + " m=" + std::to_string(m);
    if (wm.letters == wn.letters && m > 1)
        handle.fixed_point = mat_apply(mat_m, Frac::half());
    return handle;
}

MapHandle word_complement_map(const LRWord& w, std::int64_t m) {
    if (m < 1) throw SpecError("order m must be >= 1");
    MapHandle handle;
    handle.matrix = Mat2::complement();
    handle.domain = SeqSpec::mat_image(word_matrix(w), SeqSpec::full(m));
    handle.codomain = SeqSpec::mat_image(word_matrix(w.swapped()), SeqSpec::full(m));
    handle.direction = Direction::Reversing;
    handle.injectivity = Injectivity::Bijective;
    handle.degenerate = w.empty();
    handle.label = "J : " + w.str() + "*F_" + std::to_string(m) + " -> " +
                   w.swapped().str() + "*F_" + std::to_string(m);
    return handle;
}

VerificationReport verify_handle(const MapHandle& handle, std::int64_t cap) {
    const FareySeq domain = generate(handle.domain, cap);
    const FareySeq codomain = generate(handle.codomain, cap);
    return verify_terms(handle, domain, codomain);
}

VerificationReport verify_terms(const MapHandle& handle, const FareySeq& domain,
                                const FareySeq& codomain) {
    std::vector<Frac> images;
    images.reserve(domain.terms.size());
    for (const Frac& t : domain.terms) images.push_back(mat_apply(handle.matrix, t));

    if (handle.container) {
        for (const Frac& img : images) {
            if (!handle.container->contains(img))
                throw VerificationFailure(handle.label + ": image term " + img.str() +
                                          " escapes " + handle.container->name());
        }
    }

    const bool want_increasing = handle.direction == Direction::Preserving;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        const bool ok = want_increasing ? images[i] < images[i + 1] : images[i + 1] < images[i];
        if (!ok)
            throw VerificationFailure(handle.label + ": not strictly " +
                                      (want_increasing ? "increasing" : "decreasing") + " at " +
                                      domain.terms[i].str() + " -> " + images[i].str() + ", " +
                                      domain.terms[i + 1].str() + " -> " + images[i + 1].str());
    }

    std::vector<Frac> sorted = images;
    if (!want_increasing) std::reverse(sorted.begin(), sorted.end());
    if (handle.injectivity == Injectivity::Bijective) {
        if (sorted != codomain.terms)
            throw VerificationFailure(handle.label + ": image differs from codomain " +
                                      handle.codomain.name());
    } else {
        // Injective: every image term must appear in the codomain sequence.
        for (const Frac& img : sorted) {
            if (!std::binary_search(codomain.terms.begin(), codomain.terms.end(), img))
                throw VerificationFailure(handle.label + ": image term " + img.str() +
                                          " not in codomain " + handle.codomain.name());
        }
    }

    VerificationReport report;
    report.label = handle.label;
    report.domain_size = domain.size();
    report.codomain_size = codomain.size();
    report.direction = handle.direction;
    report.injectivity = handle.injectivity;

    if (handle.fixed_point) {
        const Frac fp = *handle.fixed_point;
        if (!std::binary_search(domain.terms.begin(), domain.terms.end(), fp))
            throw VerificationFailure(handle.label + ": fixed point " + fp.str() +
                                      " not in domain");
        if (mat_apply(handle.matrix, fp) != fp)
            throw VerificationFailure(handle.label + ": " + fp.str() + " is not fixed");
        report.fixed_point_checked = true;
        report.fixed_point = fp;
    }
    return report;
}

} // namespace farey

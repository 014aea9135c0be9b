#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/matrix.hpp"
#include "farey/seq_spec.hpp"
#include "farey/sequence.hpp"

namespace farey {

// A word over the alphabet {L, R} with L = [[1,0],[1,1]] and R = [[0,1],[-1,2]].
// Letters are stored in matrix-product order: the word "LR" denotes the
// product L*R, so the first letter is the outermost factor, the one applied
// last to a fraction. That outermost letter decides which half of [0,1] the
// image lands in (L pins it below 1/2, R above).
struct LRWord {
    enum class Letter : std::uint8_t { L, R };
    std::vector<Letter> letters;

    LRWord() = default;
    explicit LRWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::int64_t length() const { return static_cast<std::int64_t>(letters.size()); }
    bool empty() const { return letters.empty(); }

    static LRWord parse(const std::string& text); // "LLR", case-insensitive
    std::string str() const;

    // Swaps every L for R and vice versa (the word paired by the complement map).
    LRWord swapped() const;

    // Enumerates all 2^len words of the given length, in lexicographic order.
    static std::vector<LRWord> all_of_length(std::int64_t len);
};

Mat2 letter_matrix(LRWord::Letter l);

// Product of the word's letters, leftmost factor first.
Mat2 word_matrix(const LRWord& w);

// A monotone map between two realized sequences, ready for verification:
// every term of domain maps under matrix; the expected image is codomain.
enum class Direction { Preserving, Reversing };
enum class Injectivity { Bijective, Injective };

struct MapHandle {
    Mat2 matrix;
    SeqSpec domain;
    SeqSpec codomain;
    Direction direction = Direction::Preserving;
    Injectivity injectivity = Injectivity::Bijective;
    std::optional<SeqSpec> container; // ambient sequence every image term must lie in
    std::optional<Frac> fixed_point;  // for the involutory self-maps, when in domain
    bool degenerate = false;          // empty-word case
    std::string label;
};

// The word-indexed injection F_m -> F_n, n >= 2m, word length floor(log2(n/m)).
// Image lies below 1/2 if the outermost letter is L, above if it is R.
// Throws SpecError if n < 2m or the length does not match.
MapHandle word_injection(const LRWord& w, std::int64_t m, std::int64_t n);

// Order-preserving bijection M*F_m -> N*F_m inside F_n via N*M^-1.
// Equal word lengths floor(log2(n/m)) required; the empty-word case (m <= n < 2m)
// collapses to the identity and is flagged degenerate.
MapHandle word_pair_preserving_map(const LRWord& wm, const LRWord& wn,
                                   std::int64_t m, std::int64_t n);

// Order-reversing bijection M*F_m -> N*F_m via N*J*M^-1. For wm == wn the
// matrix M*J*M^-1 is involutory with fixed point M*(1/2) once m > 1.
MapHandle word_pair_reversing_map(const LRWord& wm, const LRWord& wn,
                                  std::int64_t m, std::int64_t n);

// The complement map J carries the word's image of F_m onto the swapped
// word's image, reversing order (works for any word, including the empty one).
MapHandle word_complement_map(const LRWord& w, std::int64_t m);

// Shared verification for any monotone-map claim: membership of every image
// term in the expected codomain, strict monotonicity in the declared
// direction, exact coverage for bijections, and the documented endpoint
// images. Throws VerificationFailure with the first counterexample.
struct VerificationReport {
    std::string label;
    std::int64_t domain_size = 0;
    std::int64_t codomain_size = 0;
    Direction direction = Direction::Preserving;
    Injectivity injectivity = Injectivity::Bijective;
    bool fixed_point_checked = false;
    std::optional<Frac> fixed_point;
};

VerificationReport verify_handle(const MapHandle& handle,
                                 std::int64_t cap = kDefaultGenerationCap);

// Same checks against sequences the caller has already generated
// (domain/codomain must realize the handle's descriptors).
VerificationReport verify_terms(const MapHandle& handle, const FareySeq& domain,
                                const FareySeq& codomain);

} // namespace farey

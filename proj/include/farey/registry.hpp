#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farey/matrix.hpp"
#include "farey/seq_spec.hpp"
#include "farey/sequence.hpp"
#include "farey/words.hpp"

namespace farey {

// Which free parameters a catalog entry takes, and the constraint tying them.
enum class ParamKind {
    OrderN,   // (n)       n >= 1
    OrderNM,  // (n, m)    1 <= m <= n-1
    NmlF,     // (n, m, l) 1 <= l <= m <= n-1
    NmlG,     // (n, m, l) 1 <= m <= l <= n-1
    MlF,      // (m, l)    1 <= l <= m         (order 2m)
    MlG,      // (m, l)    m <= l <= 2m-1      (order 2m)
    MS,       // (m, s)    m >= 1, s >= 0      (scaled order 2^s * m)
};

struct MapParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t s = 0;
    std::int64_t l = 0;

    std::string str() const;
};

// One cataloged monotone map: a fixed unimodular matrix together with
// parametric domain and codomain descriptors and the documented images of
// the domain endpoints.
struct MapEntry {
    std::string id;
    Mat2 matrix;
    Direction direction = Direction::Preserving;
    Injectivity injectivity = Injectivity::Bijective;
    ParamKind kind = ParamKind::MS;
    std::string domain_template;
    std::string codomain_template;
    std::function<SeqSpec(const MapParams&)> domain;
    std::function<SeqSpec(const MapParams&)> codomain;
    std::vector<std::pair<Frac, Frac>> endpoint_images;
};

// The full static catalog, built once. Entries are immutable after that.
const std::vector<MapEntry>& registry();

// nullptr when the id is unknown.
const MapEntry* find_entry(const std::string& id);

// Throws SpecError unless params satisfy the entry's kind constraint.
void validate_params(const MapEntry& entry, const MapParams& params);

// Termwise application to a realized domain sequence. The caller must pass
// seq = generate(entry.domain(params)); the result keeps both the image in
// domain order (the correspondence) and the ascending image sequence.
struct MapApplication {
    std::vector<Frac> images_in_domain_order;
    FareySeq image;
};

MapApplication apply_map(const MapEntry& entry, const MapParams& params, const FareySeq& seq);

// Full verification of one entry at one parameter point: codomain membership,
// strict monotonicity in the declared direction, exact coverage for
// bijections, documented endpoint images, and for reversing self-maps the
// involution property. Throws VerificationFailure with the first
// counterexample; returns the passing report otherwise.
struct MapVerification {
    std::string id;
    MapParams params;
    std::int64_t domain_size = 0;
    std::int64_t codomain_size = 0;
    std::int64_t endpoints_checked = 0;
    bool involution_checked = false;
    std::optional<Frac> fixed_point;
};

MapVerification verify_map(const MapEntry& entry, const MapParams& params,
                           std::int64_t cap = kDefaultGenerationCap);

// Every valid parameter point of an entry within the given bounds:
// (m, s) grids for scaled entries, (n, m, l) ranges for the others.
std::vector<MapParams> parameter_grid(const MapEntry& entry, std::int64_t max_m,
                                      std::int64_t max_s, std::int64_t max_n);

} // namespace farey

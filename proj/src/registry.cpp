#include "farey/registry.hpp"

#include <algorithm>

#include "farey/checked.hpp"
#include "farey/errors.hpp"

namespace farey {

namespace {

Frac fr(std::int64_t h, std::int64_t k) { return Frac(h, k); }

using EndpointList = std::vector<std::pair<Frac, Frac>>;

// Scaled base order 2^s * m of the (m, s)-parameterized entries.
std::int64_t scaled_order(const MapParams& p) {
    return checked_mul(p.m, std::int64_t{1} << p.s);
}

SeqSpec full_p(const MapParams& p) { return SeqSpec::full(scaled_order(p)); }

// F(B(2P, P)) and F(B(4P, 2P)) for P = 2^s * m.
SeqSpec bool2(const MapParams& p) {
    const std::int64_t q = scaled_order(p);
    return SeqSpec::boolean(2 * q, q);
}
SeqSpec bool4(const MapParams& p) {
    const std::int64_t q = scaled_order(p);
    return SeqSpec::boolean(4 * q, 2 * q);
}

SeqSpec low(SeqSpec s) { return SeqSpec::half_low(std::move(s)); }
SeqSpec high(SeqSpec s) { return SeqSpec::half_high(std::move(s)); }

// The four length-two word images that tile F(B(4P,2P)).
const Mat2 kWordLL(1, 0, 2, 1);
const Mat2 kWordLR(0, 1, -1, 3);
const Mat2 kWordRL(1, 1, 1, 2);
const Mat2 kWordRR(-1, 2, -2, 3);

SeqSpec word_image(const Mat2& w, const MapParams& p) {
    return SeqSpec::mat_image(w, full_p(p));
}

std::string word_name(const Mat2& w) {
    if (w == kWordLL) return "LL";
    if (w == kWordLR) return "LR";
    if (w == kWordRL) return "RL";
    return "RR";
}

MapEntry ms_entry(std::string id, Mat2 matrix, Direction dir, Injectivity inj,
                  std::function<SeqSpec(const MapParams&)> dom, std::string dom_name,
                  std::function<SeqSpec(const MapParams&)> cod, std::string cod_name,
                  EndpointList endpoints = {}) {
    MapEntry e;
    e.id = std::move(id);
    e.matrix = matrix;
    e.direction = dir;
    e.injectivity = inj;
    e.kind = ParamKind::MS;
    e.domain = std::move(dom);
    e.codomain = std::move(cod);
    e.domain_template = std::move(dom_name);
    e.codomain_template = std::move(cod_name);
    e.endpoint_images = std::move(endpoints);
    return e;
}

// Maps between word images, F(B(4P,2P)) internally: domain word, codomain
// word, mapping matrix and the documented endpoint images.
MapEntry pair_entry(std::string id, const Mat2& from, const Mat2& to, Mat2 matrix,
                    Direction dir, EndpointList endpoints) {
    return ms_entry(std::move(id), matrix, dir, Injectivity::Bijective,
                    [from](const MapParams& p) { return word_image(from, p); },
                    word_name(from) + "*F_{2^s m}",
                    [to](const MapParams& p) { return word_image(to, p); },
                    word_name(to) + "*F_{2^s m}", std::move(endpoints));
}

std::vector<MapEntry> build_registry() {
    std::vector<MapEntry> r;
    const Mat2 J = Mat2::complement();
    const Mat2 L = Mat2::lower();
    const Mat2 R = Mat2::upper();

    // --- complement involution h/k -> (k-h)/k on the basic families ---
    {
        MapEntry e;
        e.id = "eq1";
        e.matrix = J;
        e.direction = Direction::Reversing;
        e.injectivity = Injectivity::Bijective;
        e.kind = ParamKind::OrderN;
        e.domain = [](const MapParams& p) { return SeqSpec::full(p.n); };
        e.codomain = e.domain;
        e.domain_template = "F_n";
        e.codomain_template = "F_n";
        r.push_back(e);

        e.id = "eq1f";
        e.kind = ParamKind::OrderNM;
        e.domain = [](const MapParams& p) { return SeqSpec::f_upper(p.n, p.m); };
        e.codomain = [](const MapParams& p) { return SeqSpec::g_lower(p.n, p.n - p.m); };
        e.domain_template = "F_n^m";
        e.codomain_template = "G_n^{n-m}";
        r.push_back(e);

        e.id = "eq1g";
        e.domain = [](const MapParams& p) { return SeqSpec::g_lower(p.n, p.m); };
        e.codomain = [](const MapParams& p) { return SeqSpec::f_upper(p.n, p.n - p.m); };
        e.domain_template = "G_n^m";
        e.codomain_template = "F_n^{n-m}";
        r.push_back(e);

        e.id = "eq1b";
        e.domain = [](const MapParams& p) { return SeqSpec::boolean(p.n, p.m); };
        e.codomain = [](const MapParams& p) { return SeqSpec::boolean(p.n, p.n - p.m); };
        e.domain_template = "F(B(n),m)";
        e.codomain_template = "F(B(n),n-m)";
        r.push_back(e);
    }

    // --- the same involution on the l-restricted families ---
    {
        MapEntry e;
        e.matrix = J;
        e.direction = Direction::Reversing;
        e.injectivity = Injectivity::Bijective;

        e.id = "prop2a";
        e.kind = ParamKind::NmlF;
        e.domain = [](const MapParams& p) { return SeqSpec::bool_f(p.n, p.m, p.l); };
        e.codomain = [](const MapParams& p) {
            return SeqSpec::bool_f(p.n, p.n - p.l, p.n - p.m);
        };
        e.domain_template = "F(B(n),m)^l";
        e.codomain_template = "F(B(n),n-l)^{n-m}";
        r.push_back(e);

        e.id = "prop2b";
        e.kind = ParamKind::MlF;
        e.domain = [](const MapParams& p) { return SeqSpec::bool_f(2 * p.m, p.m, p.l); };
        e.codomain = [](const MapParams& p) {
            return SeqSpec::bool_f(2 * p.m, 2 * p.m - p.l, p.m);
        };
        e.domain_template = "F(B(2m),m)^l";
        e.codomain_template = "F(B(2m),2m-l)^m";
        r.push_back(e);

        e.id = "prop2c";
        e.kind = ParamKind::NmlG;
        e.domain = [](const MapParams& p) { return SeqSpec::bool_g(p.n, p.m, p.l); };
        e.codomain = [](const MapParams& p) {
            return SeqSpec::bool_g(p.n, p.n - p.l, p.n - p.m);
        };
        e.domain_template = "G(B(n),m)^l";
        e.codomain_template = "G(B(n),n-l)^{n-m}";
        r.push_back(e);

        e.id = "prop2d";
        e.kind = ParamKind::MlG;
        e.domain = [](const MapParams& p) { return SeqSpec::bool_g(2 * p.m, p.m, p.l); };
        e.codomain = [](const MapParams& p) {
            return SeqSpec::bool_g(2 * p.m, 2 * p.m - p.l, p.m);
        };
        e.domain_template = "G(B(2m),m)^l";
        e.codomain_template = "G(B(2m),2m-l)^m";
        r.push_back(e);
    }

    // --- F_P and the two halves of F(B(2P,P)), P = 2^s * m ---
    const auto dom_full = [](const MapParams& p) { return full_p(p); };
    const auto dom_low2 = [](const MapParams& p) { return low(bool2(p)); };
    const auto dom_high2 = [](const MapParams& p) { return high(bool2(p)); };
    const std::string nm_full = "F_{2^s m}";
    const std::string nm_low2 = "F(B(2^{s+1}m),2^s m)^{<=1/2}";
    const std::string nm_high2 = "F(B(2^{s+1}m),2^s m)^{>=1/2}";

    r.push_back(ms_entry("eq4", L, Direction::Preserving, Injectivity::Bijective, dom_full,
                         nm_full, dom_low2, nm_low2));
    r.push_back(ms_entry("eq15", R, Direction::Preserving, Injectivity::Bijective, dom_full,
                         nm_full, dom_high2, nm_high2));
    r.push_back(ms_entry("eq4inv", Mat2(1, 0, -1, 1), Direction::Preserving,
                         Injectivity::Bijective, dom_low2, nm_low2, dom_full, nm_full));
    r.push_back(ms_entry("eq15inv", Mat2(2, -1, 1, 0), Direction::Preserving,
                         Injectivity::Bijective, dom_high2, nm_high2, dom_full, nm_full));
    r.push_back(ms_entry("eq16", Mat2(-1, 1, -1, 2), Direction::Reversing,
                         Injectivity::Bijective, dom_full, nm_full, dom_low2, nm_low2));
    r.push_back(ms_entry("eq5", Mat2(0, 1, 1, 1), Direction::Reversing, Injectivity::Bijective,
                         dom_full, nm_full, dom_high2, nm_high2));
    r.push_back(ms_entry("eq16inv", Mat2(-2, 1, -1, 1), Direction::Reversing,
                         Injectivity::Bijective, dom_low2, nm_low2, dom_full, nm_full));
    r.push_back(ms_entry("eq5inv", Mat2(-1, 1, 1, 0), Direction::Reversing,
                         Injectivity::Bijective, dom_high2, nm_high2, dom_full, nm_full));
    r.push_back(ms_entry("eq6", Mat2(-2, 1, -3, 2), Direction::Reversing,
                         Injectivity::Bijective, dom_low2, nm_low2, dom_low2, nm_low2));
    r.push_back(ms_entry("eq7", Mat2(1, 0, 3, -1), Direction::Reversing, Injectivity::Bijective,
                         dom_high2, nm_high2, dom_high2, nm_high2));
    r.push_back(ms_entry("eq8", Mat2(-1, 1, -3, 2), Direction::Preserving,
                         Injectivity::Bijective, dom_low2, nm_low2, dom_high2, nm_high2));
    r.push_back(ms_entry("eq9", Mat2(2, -1, 3, -1), Direction::Preserving,
                         Injectivity::Bijective, dom_high2, nm_high2, dom_low2, nm_low2));

    // --- injections of F_P into the halves of F(B(4P,2P)) ---
    const auto dom_low4 = [](const MapParams& p) { return low(bool4(p)); };
    const auto dom_high4 = [](const MapParams& p) { return high(bool4(p)); };
    const std::string nm_low4 = "F(B(2^{s+2}m),2^{s+1}m)^{<=1/2}";
    const std::string nm_high4 = "F(B(2^{s+2}m),2^{s+1}m)^{>=1/2}";

    r.push_back(ms_entry("eq74", Mat2(1, 0, 2, 1), Direction::Preserving,
                         Injectivity::Injective, dom_full, nm_full, dom_low4, nm_low4,
                         {{fr(0, 1), fr(0, 1)}, {fr(1, 1), fr(1, 3)}}));
    r.push_back(ms_entry("eq75", Mat2(0, 1, -1, 3), Direction::Preserving,
                         Injectivity::Injective, dom_full, nm_full, dom_low4, nm_low4,
                         {{fr(0, 1), fr(1, 3)}, {fr(1, 1), fr(1, 2)}}));
    r.push_back(ms_entry("eq76", Mat2(1, 1, 1, 2), Direction::Preserving,
                         Injectivity::Injective, dom_full, nm_full, dom_high4, nm_high4,
                         {{fr(0, 1), fr(1, 2)}, {fr(1, 1), fr(2, 3)}}));
    r.push_back(ms_entry("eq77", Mat2(-1, 2, -2, 3), Direction::Preserving,
                         Injectivity::Injective, dom_full, nm_full, dom_high4, nm_high4,
                         {{fr(0, 1), fr(2, 3)}, {fr(1, 1), fr(1, 1)}}));
    r.push_back(ms_entry("eq78", Mat2(-1, 1, -2, 3), Direction::Reversing,
                         Injectivity::Injective, dom_full, nm_full, dom_low4, nm_low4,
                         {{fr(0, 1), fr(1, 3)}, {fr(1, 1), fr(0, 1)}}));
    r.push_back(ms_entry("eq79", Mat2(0, 1, 1, 2), Direction::Reversing,
                         Injectivity::Injective, dom_full, nm_full, dom_low4, nm_low4,
                         {{fr(0, 1), fr(1, 2)}, {fr(1, 1), fr(1, 3)}}));
    r.push_back(ms_entry("eq80", Mat2(-1, 2, -1, 3), Direction::Reversing,
                         Injectivity::Injective, dom_full, nm_full, dom_high4, nm_high4,
                         {{fr(0, 1), fr(2, 3)}, {fr(1, 1), fr(1, 2)}}));
    r.push_back(ms_entry("eq81", Mat2(1, 1, 2, 1), Direction::Reversing,
                         Injectivity::Injective, dom_full, nm_full, dom_high4, nm_high4,
                         {{fr(0, 1), fr(1, 1)}, {fr(1, 1), fr(2, 3)}}));

    // --- injections between the halves of F(B(2P,P)) and of F(B(4P,2P)) ---
    r.push_back(ms_entry("eq17", L, Direction::Preserving, Injectivity::Injective, dom_low2,
                         nm_low2, dom_low4, nm_low4,
                         {{fr(0, 1), fr(0, 1)}, {fr(1, 2), fr(1, 3)}}));
    r.push_back(ms_entry("eq18", Mat2(2, -1, 5, -2), Direction::Preserving,
                         Injectivity::Injective, dom_high2, nm_high2, dom_low4, nm_low4,
                         {{fr(1, 2), fr(0, 1)}, {fr(1, 1), fr(1, 3)}}));
    r.push_back(ms_entry("eq21", Mat2(-1, 1, -4, 3), Direction::Preserving,
                         Injectivity::Injective, dom_low2, nm_low2, dom_low4, nm_low4,
                         {{fr(0, 1), fr(1, 3)}, {fr(1, 2), fr(1, 2)}}));
    r.push_back(ms_entry("eq22", L, Direction::Preserving, Injectivity::Injective, dom_high2,
                         nm_high2, dom_low4, nm_low4,
                         {{fr(1, 2), fr(1, 3)}, {fr(1, 1), fr(1, 2)}}));
    r.push_back(ms_entry("eq23", R, Direction::Preserving, Injectivity::Injective, dom_low2,
                         nm_low2, dom_high4, nm_high4,
                         {{fr(0, 1), fr(1, 2)}, {fr(1, 2), fr(2, 3)}}));
    r.push_back(ms_entry("eq24", Mat2(3, -1, 4, -1), Direction::Preserving,
                         Injectivity::Injective, dom_high2, nm_high2, dom_high4, nm_high4,
                         {{fr(1, 2), fr(1, 2)}, {fr(1, 1), fr(2, 3)}}));
    r.push_back(ms_entry("eq25", Mat2(-3, 2, -5, 3), Direction::Preserving,
                         Injectivity::Injective, dom_low2, nm_low2, dom_high4, nm_high4,
                         {{fr(0, 1), fr(2, 3)}, {fr(1, 2), fr(1, 1)}}));
    r.push_back(ms_entry("eq26", R, Direction::Preserving, Injectivity::Injective, dom_high2,
                         nm_high2, dom_high4, nm_high4,
                         {{fr(1, 2), fr(2, 3)}, {fr(1, 1), fr(1, 1)}}));
    r.push_back(ms_entry("eq27", Mat2(-2, 1, -5, 3), Direction::Reversing,
                         Injectivity::Injective, dom_low2, nm_low2, dom_low4, nm_low4,
                         {{fr(1, 2), fr(0, 1)}, {fr(0, 1), fr(1, 3)}}));
    r.push_back(ms_entry("eq28", Mat2(-1, 1, -1, 2), Direction::Reversing,
                         Injectivity::Injective, dom_high2, nm_high2, dom_low4, nm_low4,
                         {{fr(1, 1), fr(0, 1)}, {fr(1, 2), fr(1, 3)}}));
    r.push_back(ms_entry("eq29", Mat2(-1, 1, -1, 2), Direction::Reversing,
                         Injectivity::Injective, dom_low2, nm_low2, dom_low4, nm_low4,
                         {{fr(1, 2), fr(1, 3)}, {fr(0, 1), fr(1, 2)}}));
    r.push_back(ms_entry("eq30", Mat2(1, 0, 4, -1), Direction::Reversing,
                         Injectivity::Injective, dom_high2, nm_high2, dom_low4, nm_low4,
                         {{fr(1, 1), fr(1, 3)}, {fr(1, 2), fr(1, 2)}}));
    r.push_back(ms_entry("eq31", Mat2(-3, 2, -4, 3), Direction::Reversing,
                         Injectivity::Injective, dom_low2, nm_low2, dom_high4, nm_high4,
                         {{fr(1, 2), fr(1, 2)}, {fr(0, 1), fr(2, 3)}}));
    r.push_back(ms_entry("eq32", Mat2(0, 1, 1, 1), Direction::Reversing,
                         Injectivity::Injective, dom_high2, nm_high2, dom_high4, nm_high4,
                         {{fr(1, 1), fr(1, 2)}, {fr(1, 2), fr(2, 3)}}));
    r.push_back(ms_entry("eq33", Mat2(0, 1, 1, 1), Direction::Reversing,
                         Injectivity::Injective, dom_low2, nm_low2, dom_high4, nm_high4,
                         {{fr(1, 2), fr(2, 3)}, {fr(0, 1), fr(1, 1)}}));
    r.push_back(ms_entry("eq34", Mat2(3, -1, 5, -2), Direction::Reversing,
                         Injectivity::Injective, dom_high2, nm_high2, dom_high4, nm_high4,
                         {{fr(1, 1), fr(2, 3)}, {fr(1, 2), fr(1, 1)}}));

    // --- bijections between the four word images inside F(B(4P,2P)) ---
    // order-preserving
    r.push_back(pair_entry("eq35", kWordLL, kWordLR, Mat2(-2, 1, -7, 3), Direction::Preserving,
                           {{fr(0, 1), fr(1, 3)}, {fr(1, 3), fr(1, 2)}}));
    r.push_back(pair_entry("eq36", kWordLL, kWordRL, Mat2(-1, 1, -3, 2), Direction::Preserving,
                           {{fr(0, 1), fr(1, 2)}, {fr(1, 3), fr(2, 3)}}));
    r.push_back(pair_entry("eq37", kWordLL, kWordRR, Mat2(-5, 2, -8, 3), Direction::Preserving,
                           {{fr(0, 1), fr(2, 3)}, {fr(1, 3), fr(1, 1)}}));
    r.push_back(pair_entry("eq38", kWordLR, kWordLL, Mat2(3, -1, 7, -2), Direction::Preserving,
                           {{fr(1, 3), fr(0, 1)}, {fr(1, 2), fr(1, 3)}}));
    r.push_back(pair_entry("eq39", kWordLR, kWordRL, Mat2(4, -1, 5, -1), Direction::Preserving,
                           {{fr(1, 3), fr(1, 2)}, {fr(1, 2), fr(2, 3)}}));
    r.push_back(pair_entry("eq40", kWordLR, kWordRR, Mat2(-1, 1, -3, 2), Direction::Preserving,
                           {{fr(1, 3), fr(2, 3)}, {fr(1, 2), fr(1, 1)}}));
    r.push_back(pair_entry("eq41", kWordRL, kWordLL, Mat2(2, -1, 3, -1), Direction::Preserving,
                           {{fr(1, 2), fr(0, 1)}, {fr(2, 3), fr(1, 3)}}));
    r.push_back(pair_entry("eq42", kWordRL, kWordLR, Mat2(-1, 1, -5, 4), Direction::Preserving,
                           {{fr(1, 2), fr(1, 3)}, {fr(2, 3), fr(1, 2)}}));
    r.push_back(pair_entry("eq43", kWordRL, kWordRR, Mat2(-4, 3, -7, 5), Direction::Preserving,
                           {{fr(1, 2), fr(2, 3)}, {fr(2, 3), fr(1, 1)}}));
    r.push_back(pair_entry("eq44", kWordRR, kWordLL, Mat2(3, -2, 8, -5), Direction::Preserving,
                           {{fr(2, 3), fr(0, 1)}, {fr(1, 1), fr(1, 3)}}));
    r.push_back(pair_entry("eq45", kWordRR, kWordLR, Mat2(2, -1, 3, -1), Direction::Preserving,
                           {{fr(2, 3), fr(1, 3)}, {fr(1, 1), fr(1, 2)}}));
    r.push_back(pair_entry("eq46", kWordRR, kWordRL, Mat2(5, -3, 7, -4), Direction::Preserving,
                           {{fr(2, 3), fr(1, 2)}, {fr(1, 1), fr(2, 3)}}));
    // order-reversing, between distinct images
    r.push_back(pair_entry("eq47", kWordLL, kWordLR, Mat2(-2, 1, -3, 2), Direction::Reversing,
                           {{fr(0, 1), fr(1, 2)}, {fr(1, 3), fr(1, 3)}}));
    r.push_back(pair_entry("eq48", kWordLL, kWordRL, Mat2(-5, 2, -7, 3), Direction::Reversing,
                           {{fr(0, 1), fr(2, 3)}, {fr(1, 3), fr(1, 2)}}));
    r.push_back(pair_entry("eq49", kWordLL, kWordRR, Mat2(-1, 1, 0, 1), Direction::Reversing,
                           {{fr(0, 1), fr(1, 1)}, {fr(1, 3), fr(2, 3)}}));
    r.push_back(pair_entry("eq50", kWordLR, kWordLL, Mat2(-2, 1, -3, 2), Direction::Reversing,
                           {{fr(1, 3), fr(1, 3)}, {fr(1, 2), fr(0, 1)}}));
    r.push_back(pair_entry("eq51", kWordLR, kWordRL, Mat2(-1, 1, 0, 1), Direction::Reversing,
                           {{fr(1, 3), fr(2, 3)}, {fr(1, 2), fr(1, 2)}}));
    r.push_back(pair_entry("eq52", kWordLR, kWordRR, Mat2(4, -1, 7, -2), Direction::Reversing,
                           {{fr(1, 3), fr(1, 1)}, {fr(1, 2), fr(2, 3)}}));
    r.push_back(pair_entry("eq53", kWordRL, kWordLL, Mat2(-3, 2, -7, 5), Direction::Reversing,
                           {{fr(1, 2), fr(1, 3)}, {fr(2, 3), fr(0, 1)}}));
    r.push_back(pair_entry("eq54", kWordRL, kWordLR, Mat2(-1, 1, 0, 1), Direction::Reversing,
                           {{fr(1, 2), fr(1, 2)}, {fr(2, 3), fr(1, 3)}}));
    r.push_back(pair_entry("eq55", kWordRL, kWordRR, Mat2(1, 0, 3, -1), Direction::Reversing,
                           {{fr(1, 2), fr(1, 1)}, {fr(2, 3), fr(2, 3)}}));
    r.push_back(pair_entry("eq56", kWordRR, kWordLL, Mat2(-1, 1, 0, 1), Direction::Reversing,
                           {{fr(2, 3), fr(1, 3)}, {fr(1, 1), fr(0, 1)}}));
    r.push_back(pair_entry("eq57", kWordRR, kWordLR, Mat2(2, -1, 7, -4), Direction::Reversing,
                           {{fr(2, 3), fr(1, 2)}, {fr(1, 1), fr(1, 3)}}));
    r.push_back(pair_entry("eq58", kWordRR, kWordRL, Mat2(1, 0, 3, -1), Direction::Reversing,
                           {{fr(2, 3), fr(2, 3)}, {fr(1, 1), fr(1, 2)}}));
    // order-reversing, each image onto itself
    r.push_back(pair_entry("eq59", kWordLL, kWordLL, Mat2(-3, 1, -8, 3), Direction::Reversing,
                           {{fr(0, 1), fr(1, 3)}, {fr(1, 4), fr(1, 4)}, {fr(1, 3), fr(0, 1)}}));
    r.push_back(pair_entry("eq60", kWordLR, kWordLR, Mat2(1, 0, 5, -1), Direction::Reversing,
                           {{fr(1, 3), fr(1, 2)}, {fr(2, 5), fr(2, 5)}, {fr(1, 2), fr(1, 3)}}));
    r.push_back(pair_entry("eq61", kWordRL, kWordRL, Mat2(-4, 3, -5, 4), Direction::Reversing,
                           {{fr(1, 2), fr(2, 3)}, {fr(3, 5), fr(3, 5)}, {fr(2, 3), fr(1, 2)}}));
    r.push_back(pair_entry("eq62", kWordRR, kWordRR, Mat2(5, -3, 8, -5), Direction::Reversing,
                           {{fr(2, 3), fr(1, 1)}, {fr(3, 4), fr(3, 4)}, {fr(1, 1), fr(2, 3)}}));

    return r;
}

} // namespace

std::string MapParams::str() const {
    std::string out = "(";
    bool first = true;
    const auto add = [&](const char* name, std::int64_t v) {
        if (!first) out += ", ";
        out += name;
        out += "=";
        out += std::to_string(v);
        first = false;
    };
    if (n != 0) add("n", n);
    if (m != 0) add("m", m);
    if (s != 0 || (n == 0 && l == 0)) add("s", s);
    if (l != 0) add("l", l);
    out += ")";
    return out;
}

const std::vector<MapEntry>& registry() {
    static const std::vector<MapEntry> entries = build_registry();
    return entries;
}

const MapEntry* find_entry(const std::string& id) {
    for (const MapEntry& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

void validate_params(const MapEntry& entry, const MapParams& p) {
    const auto fail = [&](const std::string& what) {
        throw SpecError(entry.id + ": " + what + " for params " + p.str());
    };
    switch (entry.kind) {
        case ParamKind::OrderN:
            if (p.n < 1) fail("need n >= 1");
            break;
        case ParamKind::OrderNM:
            if (p.m < 1 || p.m > p.n - 1) fail("need 1 <= m <= n-1");
            break;
        case ParamKind::NmlF:
            if (p.m < 1 || p.m > p.n - 1) fail("need 1 <= m <= n-1");
            if (p.l < 1 || p.l > p.m) fail("need 1 <= l <= m");
            break;
        case ParamKind::NmlG:
            if (p.m < 1 || p.m > p.n - 1) fail("need 1 <= m <= n-1");
            if (p.l < p.m || p.l > p.n - 1) fail("need m <= l <= n-1");
            break;
        case ParamKind::MlF:
            if (p.m < 1) fail("need m >= 1");
            if (p.l < 1 || p.l > p.m) fail("need 1 <= l <= m");
            break;
        case ParamKind::MlG:
            if (p.m < 1) fail("need m >= 1");
            if (p.l < p.m || p.l > 2 * p.m - 1) fail("need m <= l <= 2m-1");
            break;
        case ParamKind::MS:
            if (p.m < 1) fail("need m >= 1");
            if (p.s < 0 || p.s > 40) fail("need 0 <= s <= 40");
            break;
    }
}

MapApplication apply_map(const MapEntry& entry, const MapParams& params, const FareySeq& seq) {
    validate_params(entry, params);
    const SeqSpec expected = entry.domain(params);
    if (!(seq.spec == expected))
        throw SpecError(entry.id + ": sequence realizes " + seq.spec.name() + ", expected " +
                        expected.name());
    MapApplication out;
    out.images_in_domain_order.reserve(seq.terms.size());
    for (const Frac& t : seq.terms)
        out.images_in_domain_order.push_back(mat_apply(entry.matrix, t));
    std::vector<Frac> sorted = out.images_in_domain_order;
    if (entry.direction == Direction::Reversing) std::reverse(sorted.begin(), sorted.end());
    out.image = FareySeq{entry.codomain(params), std::move(sorted),
                         entry.direction == Direction::Reversing};
    return out;
}

MapVerification verify_map(const MapEntry& entry, const MapParams& params, std::int64_t cap) {
    validate_params(entry, params);

    MapHandle handle;
    handle.matrix = entry.matrix;
    handle.domain = entry.domain(params);
    handle.codomain = entry.codomain(params);
    handle.direction = entry.direction;
    handle.injectivity = entry.injectivity;
    handle.label = entry.id + " " + params.str();

    const FareySeq domain = generate(handle.domain, cap);
    const FareySeq codomain = generate(handle.codomain, cap);
    verify_terms(handle, domain, codomain);

    MapVerification report;
    report.id = entry.id;
    report.params = params;
    report.domain_size = domain.size();
    report.codomain_size = codomain.size();

    for (const auto& [input, expected] : entry.endpoint_images) {
        const Frac image = mat_apply(entry.matrix, input);
        if (image != expected)
            throw VerificationFailure(handle.label + ": documented image " + input.str() +
                                      " -> " + expected.str() + " but matrix gives " +
                                      image.str());
        if (std::binary_search(domain.terms.begin(), domain.terms.end(), input) &&
            !std::binary_search(codomain.terms.begin(), codomain.terms.end(), expected))
            throw VerificationFailure(handle.label + ": documented image " + expected.str() +
                                      " missing from codomain");
        ++report.endpoints_checked;
    }

    // A reversing map of a sequence onto itself must come from an involution.
    if (entry.direction == Direction::Reversing && handle.domain == handle.codomain) {
        if (mat_mul(entry.matrix, entry.matrix) != Mat2::identity())
            throw VerificationFailure(handle.label + ": self-map matrix is not involutory");
        report.involution_checked = true;
        for (const Frac& t : domain.terms) {
            if (mat_apply(entry.matrix, t) == t) {
                report.fixed_point = t;
                break;
            }
        }
    }
    return report;
}

std::vector<MapParams> parameter_grid(const MapEntry& entry, std::int64_t max_m,
                                      std::int64_t max_s, std::int64_t max_n) {
    std::vector<MapParams> grid;
    switch (entry.kind) {
        case ParamKind::OrderN:
            for (std::int64_t n = 1; n <= max_n; ++n) grid.push_back({.n = n});
            break;
        case ParamKind::OrderNM:
            for (std::int64_t n = 2; n <= max_n; ++n)
                for (std::int64_t m = 1; m <= n - 1; ++m) grid.push_back({.n = n, .m = m});
            break;
        case ParamKind::NmlF:
            for (std::int64_t n = 2; n <= max_n; ++n)
                for (std::int64_t m = 1; m <= n - 1; ++m)
                    for (std::int64_t l = 1; l <= m; ++l)
                        grid.push_back({.n = n, .m = m, .l = l});
            break;
        case ParamKind::NmlG:
            for (std::int64_t n = 2; n <= max_n; ++n)
                for (std::int64_t m = 1; m <= n - 1; ++m)
                    for (std::int64_t l = m; l <= n - 1; ++l)
                        grid.push_back({.n = n, .m = m, .l = l});
            break;
        case ParamKind::MlF:
            for (std::int64_t m = 1; 2 * m <= max_n; ++m)
                for (std::int64_t l = 1; l <= m; ++l) grid.push_back({.m = m, .l = l});
            break;
        case ParamKind::MlG:
            for (std::int64_t m = 1; 2 * m <= max_n; ++m)
                for (std::int64_t l = m; l <= 2 * m - 1; ++l) grid.push_back({.m = m, .l = l});
            break;
        case ParamKind::MS:
            for (std::int64_t m = 1; m <= max_m; ++m)
                for (std::int64_t s = 0; s <= max_s; ++s) grid.push_back({.m = m, .s = s});
            break;
    }
    return grid;
}

} // namespace farey

#include "farey/io.hpp"

#include <json.hpp>

namespace farey {

namespace {

using nlohmann::json;

json matrix_json(const Mat2& m) {
    return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})});
}

json spec_json(const SeqSpec& spec) {
    json j;
    j["family"] = family_name(spec.family());
    switch (spec.family()) {
        case Family::Full:
            j["n"] = spec.n();
            break;
        case Family::FUpper:
        case Family::GLower:
        case Family::Bool:
            j["n"] = spec.n();
            j["m"] = spec.m();
            break;
        case Family::BoolF:
        case Family::BoolG:
            j["n"] = spec.n();
            j["m"] = spec.m();
            j["l"] = spec.l();
            break;
        case Family::HalfLow:
        case Family::HalfHigh:
            j["inner"] = spec_json(spec.inner());
            break;
        case Family::MatImage:
            j["matrix"] = matrix_json(spec.matrix());
            j["inner"] = spec_json(spec.inner());
            break;
    }
    return j;
}

json terms_json(const std::vector<Frac>& terms) {
    json arr = json::array();
    for (const Frac& t : terms) arr.push_back(t.str());
    return arr;
}

} // namespace

std::string direction_name(Direction d) {
    return d == Direction::Preserving ? "preserving" : "reversing";
}

std::string injectivity_name(Injectivity i) {
    return i == Injectivity::Bijective ? "bijective" : "injective";
}

std::string spec_to_json(const SeqSpec& spec) { return spec_json(spec).dump(); }

std::string seq_to_json(const FareySeq& seq) {
    json j;
    j["spec"] = spec_json(seq.spec);
    j["terms"] = terms_json(seq.terms);
    if (seq.reversed_by_matrix) j["reversed_by_matrix"] = true;
    return j.dump();
}

std::string registry_to_json() {
    json arr = json::array();
    for (const MapEntry& e : registry()) {
        json j;
        j["id"] = e.id;
        j["matrix"] = matrix_json(e.matrix);
        j["direction"] = direction_name(e.direction);
        j["injectivity"] = injectivity_name(e.injectivity);
        j["domain"] = e.domain_template;
        j["codomain"] = e.codomain_template;
        switch (e.kind) {
            case ParamKind::OrderN: j["params"] = "n"; break;
            case ParamKind::OrderNM: j["params"] = "n,m"; break;
            case ParamKind::NmlF:
            case ParamKind::NmlG: j["params"] = "n,m,l"; break;
            case ParamKind::MlF:
            case ParamKind::MlG: j["params"] = "m,l"; break;
            case ParamKind::MS: j["params"] = "m,s"; break;
        }
        json endpoints = json::array();
        for (const auto& [in, out] : e.endpoint_images)
            endpoints.push_back(json::array({in.str(), out.str()}));
        j["endpoints"] = endpoints;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::string verification_to_json(const MapVerification& v) {
    json j;
    j["id"] = v.id;
    j["params"] = v.params.str();
    j["pass"] = true; // verify_map throws on failure
    j["domain_size"] = v.domain_size;
    j["codomain_size"] = v.codomain_size;
    j["endpoints_checked"] = v.endpoints_checked;
    j["involution_checked"] = v.involution_checked;
    j["fixed_point"] = v.fixed_point ? json(v.fixed_point->str()) : json(nullptr);
    j["counterexample"] = nullptr;
    return j.dump();
}

std::string suites_to_json(const std::vector<sweeps::SuiteResult>& suites) {
    json arr = json::array();
    for (const auto& s : suites) {
        json j;
        j["suite"] = s.name;
        j["cases"] = s.cases;
        j["failures"] = s.failures;
        j["seconds"] = s.seconds;
        if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

} // namespace farey

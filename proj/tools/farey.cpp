// Command-line front end: sequence generation, closed-form counting, the map
// catalog, and the full verification matrix.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "farey/counting.hpp"
#include "farey/errors.hpp"
#include "farey/io.hpp"
#include "farey/registry.hpp"
#include "farey/sequence.hpp"
#include "farey/sweeps.hpp"

namespace {

using nlohmann::json;

constexpr std::int64_t kCountingCap = 1'000'000;
constexpr std::int64_t kDefaultGenCap = 10'000;
// Hard ceilings for verify-all bounds.
constexpr std::int64_t kVerifyMaxN = 400;
constexpr std::int64_t kVerifyMaxM = 24;
constexpr std::int64_t kVerifyMaxS = 6;

struct Config {
    std::string format = "plain";
    std::int64_t gen_cap = kDefaultGenCap;

    bool is_json() const { return format == "json"; }
};

farey::SeqSpec spec_from_args(const std::string& family, const std::vector<std::int64_t>& args,
                              const std::string& half) {
    using farey::SeqSpec;
    const auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw farey::SpecError("family \"" + family + "\" takes " + std::to_string(count) +
                                   " integer argument(s)");
    };
    std::optional<SeqSpec> spec;
    if (family == "full") {
        need(1);
        spec = SeqSpec::full(args[0]);
    } else if (family == "fupper") {
        need(2);
        spec = SeqSpec::f_upper(args[0], args[1]);
    } else if (family == "glower") {
        need(2);
        spec = SeqSpec::g_lower(args[0], args[1]);
    } else if (family == "bool") {
        need(2);
        spec = SeqSpec::boolean(args[0], args[1]);
    } else if (family == "boolf") {
        need(3);
        spec = SeqSpec::bool_f(args[0], args[1], args[2]);
    } else if (family == "boolg") {
        need(3);
        spec = SeqSpec::bool_g(args[0], args[1], args[2]);
    } else {
        throw farey::SpecError("unknown family \"" + family +
                               "\" (full, fupper, glower, bool, boolf, boolg)");
    }
    if (half == "low") spec = SeqSpec::half_low(*spec);
    else if (half == "high") spec = SeqSpec::half_high(*spec);
    else if (!half.empty())
        throw farey::SpecError("--half takes low or high");
    spec->validate();
    return *spec;
}

int cmd_gen(const Config& cfg, const farey::SeqSpec& spec) {
    const farey::FareySeq seq = farey::generate(spec, cfg.gen_cap);
    if (cfg.is_json()) std::cout << farey::seq_to_json(seq) << "\n";
    else std::cout << farey::terms_to_plain(seq.terms) << "\n";
    return 0;
}

int cmd_count(const Config& cfg, const farey::SeqSpec& spec, bool check) {
    if (spec.base_order() > kCountingCap)
        throw farey::CapError("order exceeds counting cap " + std::to_string(kCountingCap));
    const std::int64_t count = farey::cardinality(spec);
    std::optional<bool> check_ok;
    if (check) {
        const farey::FareySeq seq = farey::generate(spec, cfg.gen_cap);
        check_ok = seq.size() == count;
    }
    if (cfg.is_json()) {
        json j;
        j["spec"] = json::parse(farey::spec_to_json(spec));
        j["count"] = count;
        if (check_ok) j["check"] = *check_ok ? "ok" : "mismatch";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count;
        if (check_ok) std::cout << (*check_ok ? " check ok" : " check MISMATCH");
        std::cout << "\n";
    }
    if (check_ok && !*check_ok) {
        std::cerr << "count disagrees with generated length for " << spec.name() << "\n";
        return 3;
    }
    return 0;
}

json matrix_json(const farey::Mat2& m) {
    return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})});
}

int cmd_map(const Config& cfg, const std::string& id, const farey::MapParams& params,
            bool verify) {
    const farey::MapEntry* entry = farey::find_entry(id);
    if (entry == nullptr) throw farey::SpecError("unknown map id \"" + id + "\"");
    farey::validate_params(*entry, params);
    const farey::FareySeq domain = farey::generate(entry->domain(params), cfg.gen_cap);
    const farey::MapApplication app = farey::apply_map(*entry, params, domain);
    std::optional<farey::MapVerification> report;
    if (verify) report = farey::verify_map(*entry, params, cfg.gen_cap);

    if (cfg.is_json()) {
        json j;
        j["id"] = entry->id;
        j["matrix"] = matrix_json(entry->matrix);
        j["direction"] = farey::direction_name(entry->direction);
        j["injectivity"] = farey::injectivity_name(entry->injectivity);
        j["params"] = params.str();
        j["domain"] = json::parse(farey::seq_to_json(domain)).at("terms");
        j["image"] = json::parse(farey::seq_to_json(app.image)).at("terms");
        json pairs = json::array();
        for (std::size_t i = 0; i < domain.terms.size(); ++i)
            pairs.push_back(json::array(
                {domain.terms[i].str(), app.images_in_domain_order[i].str()}));
        j["pairs"] = pairs;
        if (report) j["verify"] = json::parse(farey::verification_to_json(*report));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << entry->id << ": " << entry->domain_template << " -> "
                  << entry->codomain_template << " via " << entry->matrix.str() << ", "
                  << farey::direction_name(entry->direction) << ", "
                  << farey::injectivity_name(entry->injectivity) << "\n";
        std::cout << "domain: " << farey::terms_to_plain(domain.terms) << "\n";
        std::cout << "image:  " << farey::terms_to_plain(app.image.terms) << "\n";
        std::cout << "pairs: ";
        for (std::size_t i = 0; i < domain.terms.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << domain.terms[i].str() << "->" << app.images_in_domain_order[i].str();
        }
        std::cout << "\n";
        if (report) {
            std::cout << "verify: pass";
            if (report->fixed_point) std::cout << ", fixed point " << report->fixed_point->str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_maps(const Config& cfg) {
    if (cfg.is_json()) {
        std::cout << farey::registry_to_json() << "\n";
        return 0;
    }
    for (const farey::MapEntry& e : farey::registry()) {
        std::cout << std::left << std::setw(9) << e.id << " " << std::setw(17) << e.matrix.str()
                  << " " << std::setw(10) << farey::direction_name(e.direction) << " "
                  << std::setw(9) << farey::injectivity_name(e.injectivity) << " "
                  << e.domain_template << " -> " << e.codomain_template << "\n";
    }
    return 0;
}

int cmd_identities(const Config& cfg, std::int64_t n, std::int64_t m) {
    const farey::IdentityReport report = farey::check_identity_laws(n, m);
    if (cfg.is_json()) {
        json j;
        j["n"] = report.n;
        j["m"] = report.m;
        j["intersection"] = report.intersection_checks;
        j["union"] = report.union_checks;
        j["f_reduction"] = report.f_reduction_checks;
        j["g_reduction"] = report.g_reduction_checks;
        j["cross"] = report.cross_checks;
        j["total"] = report.total();
        j["pass"] = true;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "all identity laws hold at n=" << n << " m=" << m << " (" << report.total()
                  << " instances: " << report.intersection_checks << " intersection, "
                  << report.union_checks << " union, " << report.f_reduction_checks
                  << " f-reduction, " << report.g_reduction_checks << " g-reduction, "
                  << report.cross_checks << " cross)\n";
    }
    return 0;
}

int cmd_verify_all(const Config& cfg, std::optional<std::int64_t> max_n,
                   std::optional<std::int64_t> max_m, std::optional<std::int64_t> max_s,
                   bool serial) {
    farey::sweeps::Bounds bounds;
    if (max_n) {
        if (*max_n < 1 || *max_n > kVerifyMaxN)
            throw farey::CapError("--max-n must be in [1, " + std::to_string(kVerifyMaxN) + "]");
        bounds.count_max_n = bounds.family_max_n = bounds.identity_max_n = *max_n;
        bounds.registry_max_n = std::min<std::int64_t>(*max_n, 24);
    }
    if (max_m) {
        if (*max_m < 1 || *max_m > kVerifyMaxM)
            throw farey::CapError("--max-m must be in [1, " + std::to_string(kVerifyMaxM) + "]");
        bounds.registry_max_m = bounds.injection_max_m = *max_m;
        bounds.pair_max_m = bounds.swap_max_m = *max_m;
    }
    if (max_s) {
        if (*max_s < 0 || *max_s > kVerifyMaxS)
            throw farey::CapError("--max-s must be in [0, " + std::to_string(kVerifyMaxS) + "]");
        bounds.registry_max_s = *max_s;
        bounds.pair_max_s = bounds.swap_max_len = *max_s;
        bounds.injection_max_s = std::max<std::int64_t>(*max_s, 1);
    }

    const std::vector<farey::sweeps::SuiteResult> suites =
        farey::sweeps::run_all(bounds, !serial);
    bool all_pass = true;
    if (cfg.is_json()) {
        std::cout << farey::suites_to_json(suites) << "\n";
        for (const auto& s : suites) all_pass = all_pass && s.pass();
    } else {
        for (const auto& s : suites) {
            all_pass = all_pass && s.pass();
            std::cout << std::left << std::setw(18) << s.name << " " << std::right
                      << std::setw(8) << s.cases << " cases  " << (s.pass() ? "pass" : "FAIL")
                      << "  (" << std::fixed << std::setprecision(2) << s.seconds << "s)\n";
            if (!s.pass()) std::cout << "  first failure: " << s.first_failure << "\n";
        }
        std::cout << (all_pass ? "all suites passed" : "FAILURES detected") << "\n";
    }
    if (!all_pass) {
        std::cerr << "verification failed\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Farey sequences, Boolean-lattice subsequences, and their monotone "
                 "unimodular maps"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env_cap = std::getenv("FAREY_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env_cap, &end, 10);
        if (end == env_cap || *end != '\0' || v < 1) {
            std::cerr << "FAREY_CAP must be a positive integer\n";
            return 2;
        }
        cfg.gen_cap = v;
    }
    app.add_option("--format", cfg.format, "Output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    app.add_option("--cap", cfg.gen_cap, "Generation cap on the base Farey order (env FAREY_CAP)")
        ->capture_default_str();

    std::string family, half;
    std::vector<std::int64_t> family_args;
    bool check = false;

    CLI::App* gen = app.add_subcommand("gen", "Generate a sequence");
    gen->add_option("family", family, "full | fupper | glower | bool | boolf | boolg")
        ->required();
    gen->add_option("params", family_args, "Integer parameters (n [m [l]])");
    gen->add_option("--half", half, "Restrict to low (<=1/2) or high (>=1/2) half");

    CLI::App* count = app.add_subcommand("count", "Closed-form term count");
    count->add_option("family", family, "full | fupper | glower | bool | boolf | boolg")
        ->required();
    count->add_option("params", family_args, "Integer parameters (n [m [l]])");
    count->add_option("--half", half, "Restrict to a half (no closed form; errors)");
    count->add_flag("--check", check, "Also generate and compare the length");

    std::string map_id;
    farey::MapParams params;
    bool verify = false;
    CLI::App* map = app.add_subcommand("map", "Apply a cataloged map");
    map->add_option("id", map_id, "Map id, e.g. eq35 (see `farey maps`)")->required();
    map->add_option("--n", params.n, "Order parameter n");
    map->add_option("--m", params.m, "Parameter m");
    map->add_option("--s", params.s, "Scale parameter s (order 2^s * m)");
    map->add_option("--l", params.l, "Restriction parameter l");
    map->add_flag("--verify", verify, "Run the full verification for these parameters");

    CLI::App* maps = app.add_subcommand("maps", "List the map catalog");

    std::int64_t id_n = 0, id_m = 0;
    CLI::App* identities = app.add_subcommand("identities", "Check the identity laws at (n, m)");
    identities->add_option("n", id_n, "Farey order n")->required();
    identities->add_option("m", id_m, "Parameter m, 1 <= m <= n-1")->required();

    std::optional<std::int64_t> va_max_n, va_max_m, va_max_s;
    bool serial = false;
    CLI::App* verify_all = app.add_subcommand("verify-all", "Run the whole verification matrix");
    verify_all->add_option("--max-n", va_max_n, "Cap the order-indexed sweeps");
    verify_all->add_option("--max-m", va_max_m, "Cap the m-indexed sweeps");
    verify_all->add_option("--max-s", va_max_s, "Cap the scale/word-length sweeps");
    verify_all->add_flag("--serial", serial, "Disable the OpenMP kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.gen_cap < 1 || cfg.gen_cap > kCountingCap)
            throw farey::CapError("generation cap must be in [1, " +
                                  std::to_string(kCountingCap) + "]");
        if (gen->parsed()) return cmd_gen(cfg, spec_from_args(family, family_args, half));
        if (count->parsed())
            return cmd_count(cfg, spec_from_args(family, family_args, half), check);
        if (map->parsed()) return cmd_map(cfg, map_id, params, verify);
        if (maps->parsed()) return cmd_maps(cfg);
        if (identities->parsed()) return cmd_identities(cfg, id_n, id_m);
        if (verify_all->parsed())
            return cmd_verify_all(cfg, va_max_n, va_max_m, va_max_s, serial);
    } catch (const farey::IdentityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const farey::VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const farey::NeighborViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const farey::OutOfDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const farey::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "farey/io.hpp"

using farey::SeqSpec;
using nlohmann::json;

TEST_CASE("spec serialization covers every family shape") {
    CHECK(json::parse(farey::spec_to_json(SeqSpec::full(6))) ==
          json({{"family", "full"}, {"n", 6}}));
    CHECK(json::parse(farey::spec_to_json(SeqSpec::bool_f(6, 4, 3))) ==
          json({{"family", "boolf"}, {"n", 6}, {"m", 4}, {"l", 3}}));
    const json nested =
        json::parse(farey::spec_to_json(SeqSpec::half_low(SeqSpec::boolean(4, 2))));
    CHECK(nested.at("family") == "half_low");
    CHECK(nested.at("inner").at("m") == 2);
    const json image = json::parse(farey::spec_to_json(
        SeqSpec::mat_image(farey::Mat2(1, 0, 2, 1), SeqSpec::full(2))));
    CHECK(image.at("matrix") == json::array({{1, 0}, {2, 1}}));
}

TEST_CASE("sequence terms serialize as exact strings") {
    const farey::FareySeq seq = farey::generate(SeqSpec::full(4));
    const json j = json::parse(farey::seq_to_json(seq));
    CHECK(j.at("terms") == json::array({"0/1", "1/4", "1/3", "1/2", "2/3", "3/4", "1/1"}));
    CHECK(j.at("spec").at("n") == 4);

    // Plain and JSON outputs carry the same terms.
    std::vector<farey::Frac> parsed;
    for (const auto& t : j.at("terms")) parsed.push_back(farey::Frac::parse(t));
    CHECK(parsed == farey::parse_terms(farey::terms_to_plain(seq.terms)));
}

TEST_CASE("verification report serialization") {
    const farey::MapEntry* eq60 = farey::find_entry("eq60");
    REQUIRE(eq60 != nullptr );
    const auto v = farey::verify_map(*eq60, farey::MapParams{.m = 1, .s = 1});
    const json j = json::parse(farey::verification_to_json(v));
    CHECK(j.at("pass") == true);
    CHECK(j.at("fixed_point") == "2/5");
    CHECK(j.at("counterexample").is_null());
}

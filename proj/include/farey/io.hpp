#pragma once

#include <string>

#include "farey/registry.hpp"
#include "farey/seq_spec.hpp"
#include "farey/sequence.hpp"
#include "farey/sweeps.hpp"

namespace farey {

// JSON text (nlohmann behind the scenes; terms stay strings, never floats).
std::string spec_to_json(const SeqSpec& spec);
std::string seq_to_json(const FareySeq& seq);
std::string registry_to_json();
std::string verification_to_json(const MapVerification& v);
std::string suites_to_json(const std::vector<sweeps::SuiteResult>& suites);

std::string direction_name(Direction d);
std::string injectivity_name(Injectivity i);

} // namespace farey

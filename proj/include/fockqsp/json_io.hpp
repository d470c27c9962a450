#pragma once

#include <json.hpp>

#include "fockqsp/grothendieck.hpp"
#include "fockqsp/relcheck.hpp"

namespace fockqsp {

using Json = nlohmann::ordered_json;

Json laurent_to_json(const Laurent& p);
Json sequence_to_json(const Sequence& a);
Json fockvector_to_json(const FockVector& x);
Json weight_coords_to_json(const Weight& w);
Json weight_to_json(const Weight& w);
Json suite_report_to_json(const SuiteReport& report);

/// Weight coordinate "5" or "3/2" (doubled internally).
long long parse_coord_d(const std::string& token);
/// Comma-separated coordinate list.
std::vector<long long> parse_coords_d(const std::string& csv);

}  // namespace fockqsp

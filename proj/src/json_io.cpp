#include "fockqsp/json_io.hpp"

namespace fockqsp {

Json laurent_to_json(const Laurent& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json pair = Json::array();
        pair.push_back(e);
        if (c.fits_int64())
            pair.push_back(c.to_int64());
        else
            pair.push_back(c.to_string());
        out.push_back(std::move(pair));
    }
    return out;
}

Json sequence_to_json(const Sequence& a) {
    Json out;
    out["support"] = support_name(a.support());
    out["left"] = a.left_d();
    out["bits"] = a.bits();
    return out;
}

Json fockvector_to_json(const FockVector& x) {
    Json out;
    out["support"] = support_name(x.support());
    Json terms = Json::array();
    for (const auto& [a, c] : x.terms()) {
        Json pair = Json::array();
        pair.push_back(sequence_to_json(a));
        pair.push_back(laurent_to_json(c));
        terms.push_back(std::move(pair));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json weight_coords_to_json(const Weight& w) {
    Json coords = Json::array();
    for (long long d : w.coords_d) {
        if (d % 2 == 0)
            coords.push_back(d / 2);
        else
            coords.push_back(std::to_string(d) + "/2");
    }
    return coords;
}

Json weight_to_json(const Weight& w) {
    Json out;
    out["family"] = family_name(w.type.family);
    out["rank"] = w.type.rank;
    out["coords"] = weight_coords_to_json(w);
    return out;
}

Json suite_report_to_json(const SuiteReport& report) {
    Json out;
    out["relations_checked"] = report.relations_checked;
    out["instances"] = report.instances;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json entry;
        entry["relation"] = f.instance.to_string();
        entry["sample"] = f.sample;
        if (!f.detail.empty()) entry["detail"] = f.detail;
        failures.push_back(std::move(entry));
    }
    out["failures"] = std::move(failures);
    return out;
}

long long parse_coord_d(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return 2 * std::stoll(token);
    if (token.substr(slash + 1) != "2") fail(ErrorCode::BadInput, "coordinate denominator must be 2");
    return std::stoll(token.substr(0, slash));
}

std::vector<long long> parse_coords_d(const std::string& csv) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string token = csv.substr(pos, comma - pos);
        if (!token.empty()) out.push_back(parse_coord_d(token));
        pos = comma + 1;
    }
    return out;
}

}  // namespace fockqsp

#ifndef HSSPOS_REPORT_HPP
#define HSSPOS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsspos/barth_lefschetz.hpp"
#include "hsspos/rational.hpp"
#include "hsspos/verify.hpp"

namespace hsspos {

// JSON reports keep insertion order so the same inputs always serialize to
// the same bytes.  Rationals are strings ("p/q" or "n").

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const Check& c) {
    return Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
}

inline Json to_json(const ConnectivityReport& r) {
    return Json{{"space", r.space_id},
                {"v", r.v},
                {"ell", r.ell},
                {"ell_space", r.ell_space},
                {"m", r.m},
                {"n", r.n},
                {"lambda0", r.lambda0},
                {"iso_max", r.iso_max},
                {"surj_at", r.surj_at},
                {"pi_vanish_max", r.pi_vanish_max},
                {"pair_vanish_max", r.pair_vanish_max},
                {"vacuous", r.vacuous}};
}

inline Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json orbit_json(const std::map<int, int>& orbits) {
    Json o = Json::object();
    for (const auto& [size, count] : orbits) o[std::to_string(size)] = count;
    return o;
}

inline Json to_json(const SpaceSummary& s) {
    Json j{{"space", s.id}, {"algebra", s.algebra}, {"cominuscule_node", s.node}, {"v", s.v}};
    j["ell"] = s.ell >= 0 ? Json(s.ell) : Json(nullptr);
    j["orbit_values"] = orbit_json(s.orbit_values);
    j["oracle_ratio"] = s.oracle_ratio ? to_json(*s.oracle_ratio) : Json(nullptr);
    return j;
}

inline Json make_report(const std::string& command, Json inputs, Json results, const std::vector<Check>& checks,
                        std::uint64_t seed) {
    Json checks_json = Json::array();
    for (const auto& c : checks) checks_json.push_back(to_json(c));
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"checks", std::move(checks_json)},
                {"seed", seed}};
}

inline std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

} // namespace hsspos

#endif

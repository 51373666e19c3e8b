#pragma once

// Machine-readable documents. Every integer or rational in a payload is a
// decimal string, so consumers with 64-bit numbers never see a truncated value.

#include "lcd/asymptotics.hpp"
#include "lcd/genus_table.hpp"
#include "lcd/poly.hpp"
#include "lcd/series.hpp"
#include "lcd/verify.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace lcd::output {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

struct Metadata {
    std::string command;
    std::map<std::string, std::string> parameters;
    double runtime_ms = 0;
};

Json strings(const std::vector<Rational>& values);
Json interval_json(const Interval& v, unsigned digits = 15);

// Rows g_lo..g_hi of a table; refined tables carry one array over m per n.
Json table_payload(const GenusTable& t, const std::string& cls, const std::string& source,
                   unsigned g_lo, unsigned g_hi);
std::string table_csv(const GenusTable& t, unsigned g_lo, unsigned g_hi, const Metadata& meta);

Json poly_payload(const std::string& kind, const std::string& index_name, long index, const Poly& p,
                  const std::string& variable);
Json series_payload(const std::string& target, const Series& s, const Json& params);
Json report_payload(const VerifyReport& rep);

Json document(const Metadata& meta, Json payload);

// Inverse of table_payload for the unrefined and refined layouts.
GenusTable table_from_payload(const Json& payload, DiagramClass kind, std::optional<unsigned> sigma);

}  // namespace lcd::output

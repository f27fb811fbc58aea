#pragma once

#include "sasakilink/classify.hpp"

#include <json.hpp>

#include <string>

namespace sasakilink {

// JSON encodings. Integers are decimal strings and rationals "p/q" strings,
// so no consumer has to cope with numbers beyond 64 bits.
nlohmann::ordered_json to_json(const TorsionGroup& t);
nlohmann::ordered_json to_json(const HomologySummary& h);
nlohmann::ordered_json to_json(const BrieskornGraph& g);
nlohmann::ordered_json to_json(const KltData& k);
nlohmann::ordered_json to_json(const ClassificationReport& r);

// One-line CSV projection of a report; torsion appears as its canonical string.
std::string csv_header();
std::string csv_row(const std::string& input, const ClassificationReport& r);

}  // namespace sasakilink

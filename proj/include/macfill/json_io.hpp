#pragma once

#include <string>

#include "json.hpp"

#include "macfill/charge.hpp"
#include "macfill/filling.hpp"
#include "macfill/macdonald.hpp"

namespace macfill {

using json = nlohmann::ordered_json;

json to_json(const Partition& shape);
json to_json(const Filling& sigma);
json to_json(const Word& w);
/// {"sigma": ..., "delta": ..., "maj": m, "stat": p}
json to_json(const MatchPair& pair);

Partition partition_from_json(const json& j);
/// {"shape":[...], "rows":[[...], ...]}. The shape is optional and derived
/// from the row lengths when absent.
Filling filling_from_json(const json& j);
/// Array of arrays of positive integers.
std::vector<std::vector<Entry>> row_family_from_json(const json& j);

/// Parses JSON text; syntax errors become InputError carrying line:column.
json parse_json_text(const std::string& text, const std::string& source = "input");

}  // namespace macfill

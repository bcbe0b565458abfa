#include "macfill/json_io.hpp"

#include <limits>

#include "macfill/error.hpp"

namespace macfill {

json to_json(const Partition& shape) { return json(shape.parts()); }

json to_json(const Filling& sigma) {
    return json{{"shape", to_json(sigma.shape())}, {"rows", sigma.rows()}};
}

json to_json(const Word& w) { return json(w.letters); }

json to_json(const MatchPair& pair) {
    return json{{"sigma", to_json(pair.sigma)}, {"delta", to_json(pair.delta)}, {"maj", pair.maj}, {"stat", pair.stat}};
}

namespace {

int positive_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
    const auto value = v.get<long long>();
    if (value < 1 || value > std::numeric_limits<int>::max())
        throw InputError(where + ": expected a positive integer, got " + v.dump());
    return static_cast<int>(value);
}

std::vector<Entry> int_row(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array, got " + v.dump());
    std::vector<Entry> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(positive_int(v[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

}  // namespace

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw InputError("shape: expected an array of integers");
    std::vector<int> parts;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer()) throw InputError("shape[" + std::to_string(k) + "]: expected an integer");
        parts.push_back(j[k].get<int>());
    }
    return Partition(std::move(parts));
}

std::vector<std::vector<Entry>> row_family_from_json(const json& j) {
    if (!j.is_array()) throw InputError("rows: expected an array of arrays");
    std::vector<std::vector<Entry>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(int_row(j[i], "rows[" + std::to_string(i) + "]"));
    return rows;
}

Filling filling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw InputError("filling: expected an object with \"rows\"");
    auto rows = row_family_from_json(j.at("rows"));
    if (j.contains("shape")) return Filling(partition_from_json(j.at("shape")), std::move(rows));
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Filling(Partition(std::move(parts)), std::move(rows));
}

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": JSON parse error");
    }
}

}  // namespace macfill

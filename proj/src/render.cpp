#include "kvalent/render.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace kvalent {

namespace {

using nlohmann::json;

// Highest diameter present anywhere in the breakdown; -1 when empty.
int max_breakdown_diameter(const CensusTable& table) {
    int max_d = -1;
    for (const auto& row : table.by_diameter)
        if (!row.empty()) max_d = std::max(max_d, row.rbegin()->first);
    return max_d;
}

std::string delimited(const CensusTable& table, char sep) {
    const int max_d = table.has_breakdown ? max_breakdown_diameter(table) : -1;
    std::string out = "n";
    for (const char* col : {"centered", "bicentered", "total"}) {
        out += sep;
        out += col;
    }
    for (int d = 0; d <= max_d; ++d) out += sep + ("d" + std::to_string(d));
    out += '\n';

    for (int n = 1; n <= table.max_n; ++n) {
        const CensusRow& row = table.rows[static_cast<std::size_t>(n - 1)];
        out += std::to_string(n);
        for (const BigInt* v : {&row.centered, &row.bicentered, &row.total}) {
            out += sep;
            out += v->get_str();
        }
        for (int d = 0; d <= max_d; ++d) {
            const auto& dia = table.by_diameter[static_cast<std::size_t>(n - 1)];
            auto it = dia.find(d);
            out += sep;
            out += it == dia.end() ? "0" : it->second.get_str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace

const BigInt& selected_count(const CensusRow& row, SeriesSelector sel) {
    switch (sel) {
        case SeriesSelector::Centered: return row.centered;
        case SeriesSelector::Bicentered: return row.bicentered;
        case SeriesSelector::Total: return row.total;
        default: throw std::invalid_argument("selector must name a single series");
    }
}

std::string render_table(const CensusTable& table) { return delimited(table, ' '); }

std::string render_csv(const CensusTable& table) { return delimited(table, ','); }

std::string render_json(const CensusTable& table) {
    json rows = json::array();
    for (int n = 1; n <= table.max_n; ++n) {
        const CensusRow& row = table.rows[static_cast<std::size_t>(n - 1)];
        json obj{{"n", n},
                 {"centered", row.centered.get_str()},
                 {"bicentered", row.bicentered.get_str()},
                 {"total", row.total.get_str()}};
        if (table.has_breakdown) {
            json dia = json::object();
            for (const auto& [d, count] : table.by_diameter[static_cast<std::size_t>(n - 1)])
                dia[std::to_string(d)] = count.get_str();
            obj["by_diameter"] = std::move(dia);
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

CensusTable parse_census_json(const std::string& text, int k) {
    const json rows = json::parse(text);
    CensusTable table;
    table.k = k;
    table.max_n = static_cast<int>(rows.size());
    for (const json& obj : rows) {
        CensusRow row;
        row.centered = BigInt(obj.at("centered").get<std::string>());
        row.bicentered = BigInt(obj.at("bicentered").get<std::string>());
        row.total = BigInt(obj.at("total").get<std::string>());
        table.rows.push_back(std::move(row));
        if (obj.contains("by_diameter")) {
            table.has_breakdown = true;
            std::map<int, BigInt> dia;
            for (const auto& [key, value] : obj.at("by_diameter").items())
                dia[std::stoi(key)] = BigInt(value.get<std::string>());
            table.by_diameter.push_back(std::move(dia));
        }
    }
    if (table.has_breakdown &&
        table.by_diameter.size() != static_cast<std::size_t>(table.max_n))
        throw std::invalid_argument("census json mixes rows with and without breakdown");
    return table;
}

BFile census_bfile(const CensusTable& table, SeriesSelector sel, long long offset) {
    BFile b;
    for (int n = 1; n <= table.max_n; ++n)
        b.entries.push_back(
            {offset + n - 1,
             selected_count(table.rows[static_cast<std::size_t>(n - 1)], sel)});
    return b;
}

}  // namespace kvalent

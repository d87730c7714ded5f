#include "ars/table_render.hpp"

#include <json.hpp>

namespace ars {

std::string render_table_text(const LanguageTable& table) {
    std::string out;
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.forms.size(); ++i) {
            if (i > 0) out += '\t';
            out += print(row.forms[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_table_json(const LanguageTable& table) {
    nlohmann::ordered_json doc;
    doc["k"] = table.universe.k();
    doc["universe"] = table.universe.labels();
    doc["sign_count"] = table.sign_count();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json entry;
        entry["denotation"] = row.denotation.members();
        auto& forms = entry["forms"] = nlohmann::ordered_json::array();
        for (const auto& form : row.forms) forms.push_back(print(form));
        if (row.caveat) entry["caveat"] = true;
        doc["rows"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

} // namespace ars

#ifndef ARS_TABLE_RENDER_HPP
#define ARS_TABLE_RENDER_HPP

#include <string>

#include "ars/semantics.hpp"

namespace ars {

// One row per line, forms joined by tabs, trailing newline.
std::string render_table_text(const LanguageTable& table);

// Machine-readable serialization with stable key order: k, universe,
// sign_count, rows (denotation, forms, and the caveat flag when set).
std::string render_table_json(const LanguageTable& table);

} // namespace ars

#endif // ARS_TABLE_RENDER_HPP

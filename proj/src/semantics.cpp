#include "ars/semantics.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ars {

namespace {

std::string atom_context(const Expression& expr, std::size_t index) {
    return "atom " + std::to_string(index + 1) + " '" + print(expr.atoms[index]) + "': ";
}

// Denotation of one atom, with range and membership checks.
std::vector<Int> atom_denotation(const Expression& expr, std::size_t index,
                                 const Universe& universe) {
    const Atom& atom = expr.atoms[index];
    if (const auto* simple = std::get_if<SimpleTerm>(&atom)) {
        if (!universe.contains(simple->label)) {
            throw SemanticError(SemanticErrorKind::LabelNotInUniverse,
                                atom_context(expr, index) + "label " +
                                    std::to_string(simple->label) +
                                    " is not a term of the universe",
                                static_cast<std::ptrdiff_t>(index));
        }
        return {simple->label};
    }

    const auto& fraction = std::get<ClassRef>(atom);
    if (fraction.class_number < 1 || fraction.class_number > universe.k()) {
        throw SemanticError(SemanticErrorKind::ClassOutOfRange,
                            atom_context(expr, index) + "class " +
                                std::to_string(fraction.class_number) +
                                " out of range for a universe of " +
                                std::to_string(universe.k()) + " terms",
                            static_cast<std::ptrdiff_t>(index));
    }
    const Int class_size = binomial(universe.k(), fraction.class_number);
    if (fraction.place < 1 || fraction.place > class_size) {
        throw SemanticError(SemanticErrorKind::PlaceOutOfRange,
                            atom_context(expr, index) + "place " +
                                std::to_string(fraction.place) + " out of range for class " +
                                std::to_string(fraction.class_number) + " (class has " +
                                std::to_string(class_size) + " places)",
                            static_cast<std::ptrdiff_t>(index));
    }
    return unrank(fraction.class_number, fraction.place, universe).members();
}

} // namespace

Combination decode(const Expression& expr, const Universe& universe) {
    if (expr.atoms.empty()) {
        throw std::invalid_argument("decode: expression has no atoms");
    }

    // label -> index of the atom that contributed it
    std::map<Int, std::size_t> seen;
    for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
        for (Int label : atom_denotation(expr, i, universe)) {
            auto [it, inserted] = seen.emplace(label, i);
            if (inserted) continue;
            const bool both_simple = std::holds_alternative<SimpleTerm>(expr.atoms[i]) &&
                                     std::holds_alternative<SimpleTerm>(expr.atoms[it->second]);
            if (both_simple) {
                throw SemanticError(SemanticErrorKind::DuplicateLabel,
                                    atom_context(expr, i) + "duplicate simple term " +
                                        std::to_string(label),
                                    static_cast<std::ptrdiff_t>(i));
            }
            throw SemanticError(SemanticErrorKind::Overlap,
                                atom_context(expr, i) + "denotation overlaps atom " +
                                    std::to_string(it->second + 1) + " '" +
                                    print(expr.atoms[it->second]) + "' on term " +
                                    std::to_string(label),
                                static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<Int> members;
    members.reserve(seen.size());
    for (const auto& [label, index] : seen) members.push_back(label);
    return Combination(std::move(members));
}

Expression full_form(const Combination& s) {
    if (s.exponent() < 1) {
        throw SemanticError(SemanticErrorKind::ExponentTooSmall,
                            "the empty complexion has no written form");
    }
    Expression expr;
    expr.atoms.reserve(s.members().size());
    for (Int member : s.members()) expr.atoms.push_back(SimpleTerm{member});
    return expr;
}

Expression encode_semi_fractional(const Combination& s, Int retained,
                                  const Universe& universe) {
    if (s.exponent() < 2) {
        throw SemanticError(SemanticErrorKind::ExponentTooSmall,
                            "semi-fractional forms need exponent >= 2, got " +
                                std::to_string(s.exponent()));
    }
    const auto& members = s.members();
    if (!std::binary_search(members.begin(), members.end(), retained)) {
        throw SemanticError(SemanticErrorKind::NotAMember,
                            "term " + std::to_string(retained) +
                                " is not a member of the complexion");
    }

    std::vector<Int> rest;
    rest.reserve(members.size() - 1);
    for (Int member : members) {
        if (member != retained) rest.push_back(member);
    }
    const Int place = rank(Combination(std::move(rest)), universe);
    return Expression{{ClassRef{place, s.exponent() - 1}, SimpleTerm{retained}}};
}

std::vector<Expression> all_forms(const Combination& s, const Universe& universe) {
    const Int e = s.exponent();
    if (e < 1) {
        throw SemanticError(SemanticErrorKind::ExponentTooSmall,
                            "the empty complexion has no written form");
    }
    for (Int member : s.members()) {
        if (!universe.contains(member)) {
            throw SemanticError(SemanticErrorKind::LabelNotInUniverse,
                                "label " + std::to_string(member) +
                                    " is not a term of the universe");
        }
    }

    std::vector<Expression> forms;
    forms.push_back(full_form(s));
    if (e < 2) return forms;

    forms.reserve(static_cast<std::size_t>(e) + 1);
    // Retaining a larger simple term leaves a lexicographically earlier
    // remainder, so descending retained order is ascending numerator order.
    for (auto it = s.members().rbegin(); it != s.members().rend(); ++it) {
        forms.push_back(encode_semi_fractional(s, *it, universe));
    }
    return forms;
}

bool equivalent(const Expression& a, const Expression& b, const Universe& universe) {
    return decode(a, universe) == decode(b, universe);
}

Int LanguageTable::sign_count() const {
    Int total = 0;
    for (const auto& row : rows) total += static_cast<Int>(row.forms.size());
    return total;
}

LanguageTable generate_language(const Universe& universe) {
    const Int k = universe.k();
    if (k < 2) {
        throw SemanticError(SemanticErrorKind::UniverseTooSmall,
                            "the language needs at least 2 primitive terms, got " +
                                std::to_string(k));
    }

    LanguageTable table{universe, {}};
    if (k == 2) {
        // Leibniz's printed 4-sign table: each 1-nion is paired with the
        // fraction that cites the *other* 1-nion, so the fraction sign
        // denotes the whole pair rather than the row's term.
        const Int first = universe.labels()[0];
        const Int second = universe.labels()[1];
        table.rows.push_back(
            {Combination({first}),
             {Expression{{SimpleTerm{first}}},
              Expression{{ClassRef{1, 1}, SimpleTerm{second}}}},
             true});
        table.rows.push_back(
            {Combination({second}),
             {Expression{{SimpleTerm{second}}},
              Expression{{ClassRef{2, 1}, SimpleTerm{first}}}},
             true});
        return table;
    }

    for (const Combination& s : enumerate_class(universe, k - 1)) {
        table.rows.push_back({s, all_forms(s, universe), false});
    }
    return table;
}

} // namespace ars

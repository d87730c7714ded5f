#ifndef ARS_SEMANTICS_HPP
#define ARS_SEMANTICS_HPP

#include <vector>

#include "ars/notation.hpp"

namespace ars {

// Resolve an expression against a universe. A SimpleTerm denotes the
// singleton of its label; a ClassRef p/c denotes unrank(c, p). The result is
// the union of the atom denotations. Decoding is strict: atoms whose
// denotations intersect are rejected, since every written form is expected to
// partition the term it denotes.
Combination decode(const Expression& expr, const Universe& universe);

// The full form of a derived term: all of its primitive terms, ascending.
// Requires exponent >= 1.
Expression full_form(const Combination& s);

// The semi-fractional form of `s` that keeps `retained` as a written simple
// term: Fraction(rank(s minus retained), exponent - 1) followed by the simple.
// Requires retained to be a member of s and exponent >= 2.
Expression encode_semi_fractional(const Combination& s, Int retained, const Universe& universe);

// Every way of writing `s`: the full form, then (for exponent >= 2) the
// exponent-many semi-fractional forms in ascending order of fraction
// numerator, which is the descending order of the retained simple term.
std::vector<Expression> all_forms(const Combination& s, const Universe& universe);

// True iff both expressions denote the same combination.
bool equivalent(const Expression& a, const Expression& b, const Universe& universe);

struct LanguageRow {
    Combination denotation;
    std::vector<Expression> forms;
    // Set on k = 2 rows only: the row reproduces Leibniz's printed pairing, in
    // which the fraction sign denotes the whole two-term universe rather than
    // the row's 1-nion.
    bool caveat = false;
};

// The k rows x k forms sign table built on the con(k-1)nations of a universe.
struct LanguageTable {
    Universe universe;
    std::vector<LanguageRow> rows;

    Int sign_count() const;
};

// The language of k^2 signs. For k >= 3 each row pairs a con(k-1)nation with
// its k forms; k = 2 is the literal historical table (see LanguageRow::caveat).
// Requires k >= 2.
LanguageTable generate_language(const Universe& universe);

} // namespace ars

#endif // ARS_SEMANTICS_HPP

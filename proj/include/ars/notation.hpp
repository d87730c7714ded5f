#ifndef ARS_NOTATION_HPP
#define ARS_NOTATION_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ars/combinatorics.hpp"

namespace ars {

// A primitive term cited by its number.
struct SimpleTerm {
    Int label = 0;

    bool operator==(const SimpleTerm&) const = default;
};

// An atom is either a written primitive term or a quasi-fraction p/c.
using Atom = std::variant<SimpleTerm, ClassRef>;

// Parsed notation: a nonempty sequence of atoms joined by "." in source text.
// Purely syntactic; whether the atoms make sense against a universe is the
// concern of decode().
struct Expression {
    std::vector<Atom> atoms;

    bool operator==(const Expression&) const = default;
};

// Grammar:
//   expr     := atom ("." atom)*
//   atom     := fraction | simple
//   fraction := INT "/" INT
//   simple   := INT
//   INT      := nonzero digit followed by digits
// Whitespace between tokens is skipped; anything else is a SyntaxError with
// the offending offset.
Expression parse(std::string_view text);

std::string print(const Atom& atom);

// Canonical text: atoms joined by ".", fractions as "p/c", no whitespace.
// parse(print(e)) == e for every well-formed expression.
std::string print(const Expression& expr);

} // namespace ars

#endif // ARS_NOTATION_HPP

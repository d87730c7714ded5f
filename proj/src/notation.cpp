#include "ars/notation.hpp"

#include <cctype>
#include <limits>

namespace ars {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t offset() const { return pos_; }
    void advance() { ++pos_; }

    // INT := nonzero digit followed by digits.
    Int read_int() {
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw SyntaxError("expected a numeral", start);
        }
        if (peek() == '0') {
            throw SyntaxError("numerals must not start with 0", start);
        }
        Int value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const Int digit = peek() - '0';
            if (value > (std::numeric_limits<Int>::max() - digit) / 10) {
                throw SyntaxError("numeral too large", start);
            }
            value = value * 10 + digit;
            advance();
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Atom parse_atom(Scanner& scanner) {
    const Int first = scanner.read_int();
    scanner.skip_whitespace();
    if (!scanner.at_end() && scanner.peek() == '/') {
        scanner.advance();
        scanner.skip_whitespace();
        const Int class_number = scanner.read_int();
        return ClassRef{first, class_number};
    }
    return SimpleTerm{first};
}

} // namespace

Expression parse(std::string_view text) {
    Scanner scanner(text);
    Expression expr;

    scanner.skip_whitespace();
    expr.atoms.push_back(parse_atom(scanner));
    while (true) {
        scanner.skip_whitespace();
        if (scanner.at_end()) break;
        if (scanner.peek() != '.') {
            throw SyntaxError("expected '.' between atoms", scanner.offset());
        }
        scanner.advance();
        scanner.skip_whitespace();
        expr.atoms.push_back(parse_atom(scanner));
    }
    return expr;
}

std::string print(const Atom& atom) {
    if (const auto* simple = std::get_if<SimpleTerm>(&atom)) {
        return std::to_string(simple->label);
    }
    const auto& fraction = std::get<ClassRef>(atom);
    return std::to_string(fraction.place) + "/" + std::to_string(fraction.class_number);
}

std::string print(const Expression& expr) {
    std::string out;
    for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
        if (i > 0) out += '.';
        out += print(expr.atoms[i]);
    }
    return out;
}

} // namespace ars

#ifndef ARS_ERRORS_HPP
#define ARS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ars {

// Lexical or grammatical failure while reading notation text.
// `offset` is the 0-based byte position in the input where the problem was found.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

enum class SemanticErrorKind {
    LabelNotInUniverse,
    ClassOutOfRange,
    PlaceOutOfRange,
    Overlap,
    DuplicateLabel,
    NotAMember,
    ExponentTooSmall,
    UniverseTooSmall,
};

// A well-formed value is invalid relative to the universe it is read against:
// unknown label, place or class out of range, or atoms whose denotations collide.
// `atom_index` is the 0-based position of the offending atom, or -1 when the
// error is not tied to a single atom.
class SemanticError : public std::runtime_error {
public:
    SemanticError(SemanticErrorKind kind, const std::string& message,
                  std::ptrdiff_t atom_index = -1)
        : std::runtime_error(message), kind_(kind), atom_index_(atom_index) {}

    SemanticErrorKind kind() const noexcept { return kind_; }
    std::ptrdiff_t atom_index() const noexcept { return atom_index_; }

private:
    SemanticErrorKind kind_;
    std::ptrdiff_t atom_index_;
};

} // namespace ars

#endif // ARS_ERRORS_HPP

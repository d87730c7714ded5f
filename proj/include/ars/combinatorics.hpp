#ifndef ARS_COMBINATORICS_HPP
#define ARS_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "ars/errors.hpp"

namespace ars {

using Int = std::int64_t;

// Exact C(n, m). Returns 0 when m > n. Throws std::overflow_error if the
// result does not fit in Int, std::invalid_argument on negative input.
Int binomial(Int n, Int m);

// The ordered class of k numbered primitive terms. Labels are distinct
// positive integers in ascending order; they fix every place number.
class Universe {
public:
    explicit Universe(std::vector<Int> labels);

    // Shorthand universe with labels 1..k.
    static Universe of_size(Int k);

    Int k() const noexcept { return static_cast<Int>(labels_.size()); }
    const std::vector<Int>& labels() const noexcept { return labels_; }

    bool contains(Int label) const;

    // 0-based position of a label; the label must be present.
    Int index_of(Int label) const;

    bool operator==(const Universe&) const = default;

private:
    std::vector<Int> labels_;
};

// A complexion: an unordered selection of labels, kept in ascending order.
// The exponent (Leibniz's "distance") is the number of members; it may be 0
// for the single con0nation.
class Combination {
public:
    Combination() = default;
    explicit Combination(std::vector<Int> members);

    Int exponent() const noexcept { return static_cast<Int>(members_.size()); }
    const std::vector<Int>& members() const noexcept { return members_; }

    bool operator==(const Combination&) const = default;
    bool operator<(const Combination& other) const { return members_ < other.members_; }

private:
    std::vector<Int> members_;
};

// A citation of a derived term outside its class: the combination found at
// `place` of class `class_number`, written p/c in notation.
struct ClassRef {
    Int place = 0;
    Int class_number = 0;

    bool operator==(const ClassRef&) const = default;
};

// All C(k, c) combinations of exponent c, in ascending lexicographic order of
// their member lists. The place number of a combination is its 1-based
// position in this list.
std::vector<Combination> enumerate_class(const Universe& universe, Int class_number);

// 1-based place of `s` within its class, computed via the combinatorial
// number system rather than by scanning the enumeration.
Int rank(const Combination& s, const Universe& universe);

// Inverse of rank: the combination at `place` of class `class_number`.
Combination unrank(Int class_number, Int place, const Universe& universe);

} // namespace ars

#endif // ARS_COMBINATORICS_HPP

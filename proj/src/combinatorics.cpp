#include "ars/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ars {

Int binomial(Int n, Int m) {
    if (n < 0 || m < 0) {
        throw std::invalid_argument("binomial: arguments must be nonnegative, got C(" +
                                    std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    if (m > n) return 0;
    m = std::min(m, n - m);

    // Multiplicative form; the running value after step i is C(n-m+i, i),
    // which never exceeds the final result, so checking the running value
    // against Int catches exactly the overflowing cases. The 128-bit
    // intermediate keeps each step exact.
    unsigned __int128 result = 1;
    for (Int i = 1; i <= m; ++i) {
        result = result * static_cast<unsigned __int128>(n - m + i) /
                 static_cast<unsigned __int128>(i);
        if (result > static_cast<unsigned __int128>(std::numeric_limits<Int>::max())) {
            throw std::overflow_error("binomial: C(" + std::to_string(n) + ", " +
                                      std::to_string(m) + ") does not fit in 64 bits");
        }
    }
    return static_cast<Int>(result);
}

Universe::Universe(std::vector<Int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw std::invalid_argument("universe: needs at least one label");
    }
    Int previous = 0;
    for (Int label : labels_) {
        if (label < 1) {
            throw std::invalid_argument("universe: labels must be positive, got " +
                                        std::to_string(label));
        }
        if (label <= previous) {
            throw std::invalid_argument("universe: labels must be strictly ascending");
        }
        previous = label;
    }
}

Universe Universe::of_size(Int k) {
    if (k < 1) {
        throw std::invalid_argument("universe: size must be at least 1, got " +
                                    std::to_string(k));
    }
    std::vector<Int> labels(static_cast<std::size_t>(k));
    std::iota(labels.begin(), labels.end(), Int{1});
    return Universe(std::move(labels));
}

bool Universe::contains(Int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

Int Universe::index_of(Int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw std::invalid_argument("universe: label " + std::to_string(label) +
                                    " is not a member");
    }
    return static_cast<Int>(it - labels_.begin());
}

Combination::Combination(std::vector<Int> members) : members_(std::move(members)) {
    Int previous = 0;
    for (Int member : members_) {
        if (member < 1) {
            throw std::invalid_argument("combination: members must be positive, got " +
                                        std::to_string(member));
        }
        if (member <= previous) {
            throw std::invalid_argument("combination: members must be strictly ascending");
        }
        previous = member;
    }
}

namespace {

void check_class_in_range(Int class_number, Int k) {
    if (class_number < 0 || class_number > k) {
        throw SemanticError(SemanticErrorKind::ClassOutOfRange,
                            "class " + std::to_string(class_number) +
                                " out of range for a universe of " + std::to_string(k) +
                                " terms");
    }
}

// 0-based positions of the members of s within the universe. Rejects members
// that are not labels of the universe.
std::vector<Int> member_positions(const Combination& s, const Universe& universe) {
    std::vector<Int> positions;
    positions.reserve(s.members().size());
    for (Int member : s.members()) {
        if (!universe.contains(member)) {
            throw SemanticError(SemanticErrorKind::LabelNotInUniverse,
                                "label " + std::to_string(member) +
                                    " is not a term of the universe");
        }
        positions.push_back(universe.index_of(member));
    }
    return positions;
}

} // namespace

std::vector<Combination> enumerate_class(const Universe& universe, Int class_number) {
    const Int k = universe.k();
    check_class_in_range(class_number, k);

    const std::size_t c = static_cast<std::size_t>(class_number);
    std::vector<Combination> result;
    result.reserve(static_cast<std::size_t>(binomial(k, class_number)));

    std::vector<Int> idx(c);
    std::iota(idx.begin(), idx.end(), Int{0});
    while (true) {
        std::vector<Int> members;
        members.reserve(c);
        for (Int i : idx) members.push_back(universe.labels()[static_cast<std::size_t>(i)]);
        result.emplace_back(std::move(members));

        // Advance to the next index combination in lexicographic order.
        std::size_t j = c;
        while (j > 0 && idx[j - 1] == k - static_cast<Int>(c - j) - 1) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t m = j; m < c; ++m) idx[m] = idx[m - 1] + 1;
    }
    return result;
}

Int rank(const Combination& s, const Universe& universe) {
    const Int k = universe.k();
    const Int c = s.exponent();
    check_class_in_range(c, k);
    const std::vector<Int> pos = member_positions(s, universe);

    // Lexicographic place via the combinatorial number system:
    // rank0 = C(k,c) - 1 - sum_j C(k-1-pos[j], c-j).
    Int rank0 = binomial(k, c) - 1;
    for (Int j = 0; j < c; ++j) {
        rank0 -= binomial(k - 1 - pos[static_cast<std::size_t>(j)], c - j);
    }
    return rank0 + 1;
}

Combination unrank(Int class_number, Int place, const Universe& universe) {
    const Int k = universe.k();
    check_class_in_range(class_number, k);
    const Int class_size = binomial(k, class_number);
    if (place < 1 || place > class_size) {
        throw SemanticError(SemanticErrorKind::PlaceOutOfRange,
                            "place " + std::to_string(place) + " out of range for class " +
                                std::to_string(class_number) + " (class has " +
                                std::to_string(class_size) + " places)");
    }

    std::vector<Int> members;
    members.reserve(static_cast<std::size_t>(class_number));
    Int remaining = place - 1;
    Int next = 0;
    for (Int j = 0; j < class_number; ++j) {
        for (Int i = next; i < k; ++i) {
            // Combinations starting with position i at this slot.
            const Int below = binomial(k - 1 - i, class_number - 1 - j);
            if (remaining < below) {
                members.push_back(universe.labels()[static_cast<std::size_t>(i)]);
                next = i + 1;
                break;
            }
            remaining -= below;
        }
    }
    return Combination(std::move(members));
}

} // namespace ars

#include "ars/claims.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ars {

Int complexiones_simpliciter(Int k) {
    if (k < 1) {
        throw std::invalid_argument("complexiones simpliciter: k must be >= 1, got " +
                                    std::to_string(k));
    }
    if (k > 63) {
        throw std::overflow_error("complexiones simpliciter: 2^" + std::to_string(k) +
                                  " - 1 does not fit in 64 bits");
    }
    if (k == 63) return std::numeric_limits<Int>::max(); // 2^63 - 1 exactly
    return (Int{1} << k) - 1;
}

Int language_size(Int k) {
    if (k < 2) {
        throw std::invalid_argument("language size: k must be >= 2, got " +
                                    std::to_string(k));
    }
    Int square = 0;
    if (__builtin_mul_overflow(k, k, &square)) {
        throw std::overflow_error("language size: k^2 does not fit in 64 bits");
    }
    const Int by_identity = binomial(k, k - 1) * (1 + binomial(k - 1, k - 2));
    if (by_identity != square) {
        throw std::logic_error("language size: C(k,k-1)*(1+C(k-1,k-2)) != k^2 at k = " +
                               std::to_string(k));
    }
    return square;
}

Int semi_fractional_count(Int k) {
    if (k < 2) {
        throw std::invalid_argument("semi-fractional count: k must be >= 2, got " +
                                    std::to_string(k));
    }
    Int product = 0;
    if (__builtin_mul_overflow(k, k - 1, &product)) {
        throw std::overflow_error("semi-fractional count: k(k-1) does not fit in 64 bits");
    }
    return product;
}

const char* count_method_name(CountMethod method) {
    switch (method) {
        case CountMethod::PrimitivePair: return "primitive-pair writing";
        case CountMethod::GenusSpeciesSubsets: return "genus/species subsets";
        case CountMethod::SemiFractionalExpressions: return "semi-fractional expressions";
    }
    return "?";
}

DerivedTermCount leibniz_derived_term_count(Int exponent) {
    switch (exponent) {
        case 2: return {2, CountMethod::PrimitivePair};
        case 3: return {7, CountMethod::GenusSpeciesSubsets};
        case 4: return {16, CountMethod::SemiFractionalExpressions};
        default:
            throw std::invalid_argument(
                "derived-term count: undefined for exponent " + std::to_string(exponent) +
                "; only 2, 3 and 4 are reckoned");
    }
}

ClaimReport leibniz_claim_check(Int exponent) {
    const DerivedTermCount stated = leibniz_derived_term_count(exponent);
    const Int simpliciter = complexiones_simpliciter(exponent);
    return {exponent, stated.count, simpliciter, stated.count == simpliciter};
}

std::map<Int, std::vector<Combination>> genus_species_decomposition(const Combination& s) {
    if (s.exponent() < 1) {
        throw std::invalid_argument("genus/species decomposition: needs exponent >= 1");
    }
    const Universe genus(s.members());
    std::map<Int, std::vector<Combination>> groups;
    for (Int c = 1; c <= genus.k(); ++c) {
        groups.emplace(c, enumerate_class(genus, c));
    }
    return groups;
}

} // namespace ars

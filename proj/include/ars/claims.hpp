#ifndef ARS_CLAIMS_HPP
#define ARS_CLAIMS_HPP

#include <map>
#include <string>
#include <vector>

#include "ars/combinatorics.hpp"

namespace ars {

// Number of complexiones simpliciter of k elements: 2^k - 1.
Int complexiones_simpliciter(Int k);

// Total sign count of the language over k primitive terms: k^2. Also
// recomputes C(k,k-1) * (1 + C(k-1,k-2)) and checks it equals k^2; a mismatch
// would mean broken arithmetic and raises std::logic_error.
Int language_size(Int k);

// Number of semi-fractional signs in the language: k(k-1), which equals
// C(k,k-1) * C(k-1,k-2).
Int semi_fractional_count(Int k);

// The Dissertatio reckons the derived-term counts 2, 7 and 16 by three
// different methods; the tag records which one produced the count.
enum class CountMethod {
    PrimitivePair,             // exponent 2: the two written primitive terms
    GenusSpeciesSubsets,       // exponent 3: genus, intermediate genera, species
    SemiFractionalExpressions, // exponent 4: expressions of its con3nations
};

const char* count_method_name(CountMethod method);

struct DerivedTermCount {
    Int count = 0;
    CountMethod method = CountMethod::PrimitivePair;
};

// Leibniz's derived-term count for a complexion of the given exponent.
// Defined only for exponents 2, 3 and 4.
DerivedTermCount leibniz_derived_term_count(Int exponent);

// Comparison of Leibniz's stated count against the 2^e - 1 formula he claims
// it instantiates. The counts agree only at exponent 3.
struct ClaimReport {
    Int exponent = 0;
    Int leibniz_count = 0;
    Int simpliciter_count = 0;
    bool matches = false;
};

ClaimReport leibniz_claim_check(Int exponent);

// All nonempty subsets of `s`, grouped by exponent: the genus itself, the
// intermediate genera, and the 1-nion species. Groups are lexicographically
// ordered; the totals across groups sum to 2^e - 1.
std::map<Int, std::vector<Combination>> genus_species_decomposition(const Combination& s);

} // namespace ars

#endif // ARS_CLAIMS_HPP

#ifndef ARS_VERIFICATION_HPP
#define ARS_VERIFICATION_HPP

#include <iosfwd>

#include "ars/combinatorics.hpp"

namespace ars {

// Runs the cross-module invariant suite, printing one pass/fail line per
// check to `out`. Formula-level checks run for k = 2..min(k_max, 64);
// exhaustive enumeration checks are capped lower (10, 12 or 8 depending on
// cost). Returns true iff every check passed. Requires k_max >= 2.
bool run_verification(Int k_max, std::ostream& out);

} // namespace ars

#endif // ARS_VERIFICATION_HPP

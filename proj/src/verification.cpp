#include "ars/verification.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "ars/claims.hpp"
#include "ars/semantics.hpp"

namespace ars {

namespace {

struct Reporter {
    std::ostream& out;
    bool all_passed = true;

    void check(const std::string& name, bool passed, const std::string& detail = "") {
        out << (passed ? "[PASS] " : "[FAIL] ") << name;
        if (!passed && !detail.empty()) out << " -- " << detail;
        out << '\n';
        all_passed = all_passed && passed;
    }
};

std::string range_label(Int lo, Int hi) {
    return "(k = " + std::to_string(lo) + ".." + std::to_string(hi) + ")";
}

} // namespace

bool run_verification(Int k_max, std::ostream& out) {
    if (k_max < 2) {
        throw std::invalid_argument("verification: k_max must be >= 2, got " +
                                    std::to_string(k_max));
    }
    Reporter report{out};

    const Int formula_max = std::min<Int>(k_max, 64);
    const Int table_max = std::min<Int>(k_max, 10);
    const Int subsets_max = std::min<Int>(k_max, 12);
    const Int encode_max = std::min<Int>(k_max, 8);

    {
        bool ok = true;
        std::string detail;
        for (Int k = 2; k <= formula_max && ok; ++k) {
            const Int lhs = binomial(k, k - 1) * (1 + binomial(k - 1, k - 2));
            if (lhs != k * k || language_size(k) != k * k) {
                ok = false;
                detail = "identity broke at k = " + std::to_string(k);
            }
        }
        report.check("proposition identity C(k,k-1)*(1+C(k-1,k-2)) == k^2 " +
                         range_label(2, formula_max),
                     ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (Int k = 2; k <= table_max && ok; ++k) {
            const LanguageTable table = generate_language(Universe::of_size(k));
            if (table.sign_count() != k * k) {
                ok = false;
                detail = "sign count " + std::to_string(table.sign_count()) + " at k = " +
                         std::to_string(k);
            }
        }
        report.check("language sign count == k^2 " + range_label(2, table_max), ok, detail);
    }

    {
        // rank and unrank agree with the enumeration order on every class.
        bool ok = true;
        std::string detail;
        for (Int k = 1; k <= table_max && ok; ++k) {
            const Universe u = Universe::of_size(k);
            for (Int c = 0; c <= k && ok; ++c) {
                const auto combos = enumerate_class(u, c);
                if (static_cast<Int>(combos.size()) != binomial(k, c)) {
                    ok = false;
                    detail = "class size mismatch at k = " + std::to_string(k);
                    break;
                }
                for (std::size_t i = 0; i < combos.size(); ++i) {
                    const Int place = static_cast<Int>(i) + 1;
                    if (rank(combos[i], u) != place || unrank(c, place, u) != combos[i]) {
                        ok = false;
                        detail = "rank/unrank disagreement at k = " + std::to_string(k) +
                                 ", c = " + std::to_string(c) + ", place = " +
                                 std::to_string(place);
                        break;
                    }
                }
            }
        }
        report.check("rank/unrank bijective on every class " + range_label(1, table_max),
                     ok, detail);
    }

    {
        // 2^k - 1 against a direct nonempty-subset count.
        bool ok = true;
        std::string detail;
        for (Int k = 1; k <= subsets_max && ok; ++k) {
            Int count = 0;
            for (Int c = 1; c <= k; ++c) {
                count += static_cast<Int>(enumerate_class(Universe::of_size(k), c).size());
            }
            if (count != complexiones_simpliciter(k)) {
                ok = false;
                detail = "mismatch at k = " + std::to_string(k);
            }
        }
        report.check("complexiones simpliciter == nonempty subset count " +
                         range_label(1, subsets_max),
                     ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (Int e = 2; e <= std::min<Int>(k_max, 10) && ok; ++e) {
            Int total = 0;
            for (const auto& [c, group] : genus_species_decomposition(
                     Combination(Universe::of_size(e).labels()))) {
                total += static_cast<Int>(group.size());
            }
            if (total != complexiones_simpliciter(e)) {
                ok = false;
                detail = "total mismatch at e = " + std::to_string(e);
            }
        }
        report.check("genus/species decomposition totals == 2^e - 1 (e = 2.." +
                         std::to_string(std::min<Int>(k_max, 10)) + ")",
                     ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (Int e = 2; e <= 4; ++e) {
            const ClaimReport claim = leibniz_claim_check(e);
            if (claim.matches != (e == 3)) {
                ok = false;
                detail = "unexpected match result at e = " + std::to_string(e);
            }
            out << "       derived-term count at e = " << e << ": " << claim.leibniz_count
                << " vs 2^e - 1 = " << claim.simpliciter_count << " -> "
                << (claim.matches ? "match" : "mismatch") << '\n';
        }
        report.check("Leibniz's 2^e - 1 claim holds only at e = 3", ok, detail);
    }

    {
        // Every sign in a row means the row's term; distinct rows mean
        // distinct terms; all canonical strings distinct; parse round-trips.
        bool cosig = true;
        bool distinct = true;
        bool roundtrip = true;
        std::string cosig_detail, distinct_detail, roundtrip_detail;
        for (Int k = 2; k <= table_max; ++k) {
            const Universe u = Universe::of_size(k);
            const LanguageTable table = generate_language(u);
            std::set<std::string> strings;
            std::set<Combination> denotations;
            for (const auto& row : table.rows) {
                denotations.insert(row.denotation);
                for (const auto& form : row.forms) {
                    const std::string text = print(form);
                    if (!strings.insert(text).second && distinct) {
                        distinct = false;
                        distinct_detail = "duplicate sign " + text + " at k = " +
                                          std::to_string(k);
                    }
                    if (parse(text) != form && roundtrip) {
                        roundtrip = false;
                        roundtrip_detail = "parse/print mismatch on " + text;
                    }
                    if (k >= 3 && !row.caveat && decode(form, u) != row.denotation &&
                        cosig) {
                        cosig = false;
                        cosig_detail = "sign " + text + " does not denote its row at k = " +
                                       std::to_string(k);
                    }
                }
            }
            if (denotations.size() != table.rows.size() && cosig) {
                cosig = false;
                cosig_detail = "rows share a denotation at k = " + std::to_string(k);
            }
        }
        report.check("co-signification within rows, distinct across rows (k = 3.." +
                         std::to_string(table_max) + ")",
                     cosig, cosig_detail);
        report.check("all table signs pairwise distinct " + range_label(2, table_max),
                     distinct, distinct_detail);
        report.check("parse(print(sign)) == sign for every table sign " +
                         range_label(2, table_max),
                     roundtrip, roundtrip_detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (Int k = 3; k <= table_max && ok; ++k) {
            const LanguageTable table = generate_language(Universe::of_size(k));
            Int fraction_signs = 0;
            for (const auto& row : table.rows) {
                for (const auto& form : row.forms) {
                    for (const auto& atom : form.atoms) {
                        if (std::holds_alternative<ClassRef>(atom)) {
                            ++fraction_signs;
                            break;
                        }
                    }
                }
            }
            if (fraction_signs != semi_fractional_count(k)) {
                ok = false;
                detail = std::to_string(fraction_signs) + " fraction signs at k = " +
                         std::to_string(k) + ", expected " +
                         std::to_string(semi_fractional_count(k));
            }
        }
        report.check("semi-fractional sign count == k(k-1) (k = 3.." +
                         std::to_string(table_max) + ")",
                     ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (Int k = 2; k <= encode_max && ok; ++k) {
            const Universe u = Universe::of_size(k);
            for (Int c = 2; c <= k && ok; ++c) {
                for (const Combination& s : enumerate_class(u, c)) {
                    for (Int member : s.members()) {
                        if (decode(encode_semi_fractional(s, member, u), u) != s) {
                            ok = false;
                            detail = "encode/decode mismatch at k = " + std::to_string(k);
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        report.check("decode(encode_semi_fractional(s, x)) == s exhaustively " +
                         range_label(2, encode_max),
                     ok, detail);
    }

    out << (report.all_passed ? "all checks passed\n" : "some checks FAILED\n");
    return report.all_passed;
}

} // namespace ars

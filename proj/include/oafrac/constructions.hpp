#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oafrac/oarray.hpp"

namespace oafrac {

/// Construction case, selected by gcd(s_1..s_k).
///
/// The gcd-2/4 and gcd-6 arrays are repetition-free proper fractions. The
/// gcd-3 arrays are multisets: the zigzag first row mirrors the two-element
/// S3 class {x,y} onto itself inside one last-row block, so those runs
/// appear twice. The doubling covers whole conjugacy classes (that is what
/// the second S3 listing buys), so the multiset conjugacy condition still
/// holds, and "2/3 fraction" refers to the size 2 L_{k-1}.
enum class RecipeCase {
    Gcd2Or4,  // any trailing orders; minimal size N = L_{k-1}
    Gcd6,     // symmetric 6^k only; N = 3 L_{k-1}
    Gcd3,     // 6 x 3^{k-1} only; N = 2 L_{k-1}
};

const char* to_string(RecipeCase c);

/// Exact reduced ratio N / L_k.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool operator==(const Fraction&) const = default;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Fraction fraction_of(std::uint64_t size, Wide complete_size);

/// Which element order row 1 uses (only meaningful when s_1 = 6, where S3
/// has the two listings).
enum class Row1Ordering {
    CaseDefault,  // first listing for gcd 2/4/6, second for gcd 3
    First,
    Second,
};

/// Everything needed to fill the rows of a construction: the case, the
/// target size N, the per-row repetition counts v_1..v_k, and the row-1
/// element ordering.
///
/// The repetition counts come from the case:
///   gcd 2 or 4:  N = L_{k-1},  v_1 = N/s_1,  v_j = N/(s_2..s_j)
///   gcd 6:       N = 3*6^{k-1}, v_1 = N/s_1,  v_j = 3*6^{k-j}
///   gcd 3:       N = 2 L_{k-1}, v_1 = 2*3^{k-2}, v_j = 4*3^{k-j}
/// All v_j must divide out exactly or the recipe is rejected.
struct ConstructionRecipe {
    FactorSpec spec;
    RecipeCase recipe_case;
    std::vector<std::uint64_t> v;  // v[j-1] = v_j
    std::uint64_t size = 0;        // N
    GroupOrdering row1_ordering;
    std::string row1_tag;     // S3, S3b, D4 or D5
    bool in_catalog = false;  // true iff this exact spec is a built-in catalog row

    ConstructionRecipe() : spec({2, 2}) {}
};

/// Pick the case and compute the repetition counts for a spec. Requires
/// s_1 in {6, 8, 10} (the factor carried by the nonabelian group) and a
/// shape admissible for one of the three cases; otherwise throws
/// UnsupportedCaseError naming the failed condition.
ConstructionRecipe select_recipe(const FactorSpec& spec,
                                 Row1Ordering ordering = Row1Ordering::CaseDefault);

/// Row 1: the group elements in the fixed order. gcd 2/4/6 repeats the
/// whole sequence v_1 times; gcd 3 alternates the sequence forward and
/// backward until N entries.
std::vector<int> fill_row1(const ConstructionRecipe& recipe);

/// Rows 2..k all follow one pattern: each element of Z_{s_j} repeated v_j
/// times, and every pass rotates the element sequence one step further
/// (for s_j = 2 a rotation is the same as writing the sequence reversed).
/// Identical repeated passes would collide with row 1's period and lose
/// strength k-1.
///
/// fill_middle_row takes 1-based j with 2 <= j <= k-1.
std::vector<int> fill_middle_row(const ConstructionRecipe& recipe, int j);

std::vector<int> fill_last_row(const ConstructionRecipe& recipe);

/// Assemble the full array for a supported spec.
OrthogonalArray construct(const FactorSpec& spec,
                          Row1Ordering ordering = Row1Ordering::CaseDefault);

OrthogonalArray construct(const ConstructionRecipe& recipe);

/// One row of the built-in catalog of reference constructions.
struct CatalogRow {
    std::string design;            // e.g. "8x4x4"
    FactorSpec spec;
    std::uint64_t complete_size;   // L_k
    std::uint64_t array_size;      // N
    std::string note;              // "", "=3L(k-1)" or "=2L(k-1)"
    Fraction fraction;
    OrthogonalArray array;
    StrengthReport strength;       // at t = k-1
    ConjugacyReport conjugacy;
    int observed_max_strength = 0;
    bool repetition_free = false;  // false exactly for the gcd-3 rows
};

/// The 31 reference designs with their recorded sizes and fractions.
struct CatalogEntry {
    std::vector<int> orders;
    std::uint64_t complete_size;
    std::uint64_t array_size;
    const char* note;
    Fraction fraction;
};
const std::vector<CatalogEntry>& catalog_entries();

/// Groups matching an array's tags, for conjugacy verification.
std::vector<FiniteGroup> groups_for_array(const OrthogonalArray& d);

/// Construct and verify every catalog design. Each array must reproduce the
/// recorded complete size, array size and fraction, verify strength k-1
/// (and no more), and satisfy the conjugacy condition; any mismatch throws
/// CatalogError naming the row.
std::vector<CatalogRow> build_catalog();

/// Fixed-column text table of catalog results.
std::string render_catalog_table(const std::vector<CatalogRow>& rows);

/// JSON mirror of the catalog summary.
std::string catalog_to_json(const std::vector<CatalogRow>& rows);

}  // namespace oafrac

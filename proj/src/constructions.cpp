#include "oafrac/constructions.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "oafrac/errors.hpp"
#include "oafrac/io.hpp"

namespace oafrac {

const char* to_string(RecipeCase c) {
    switch (c) {
        case RecipeCase::Gcd2Or4: return "gcd-2/4";
        case RecipeCase::Gcd6: return "gcd-6";
        case RecipeCase::Gcd3: return "gcd-3";
    }
    return "?";
}

Fraction fraction_of(std::uint64_t size, Wide complete_size) {
    Wide g = gcd_wide(static_cast<Wide>(size), complete_size);
    return Fraction{to_u64(static_cast<Wide>(size) / g), to_u64(complete_size / g)};
}

namespace {

GroupOrdering natural_ordering(FiniteGroup g, std::string label) {
    GroupOrdering o;
    o.sequence.resize(static_cast<size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) o.sequence[static_cast<size_t>(i)] = i;
    o.group = std::move(g);
    o.label = std::move(label);
    return o;
}

std::string design_label(const FactorSpec& spec) {
    std::string s;
    for (int i = 0; i < spec.factor_count(); ++i) {
        if (i > 0) s += "x";
        s += std::to_string(spec.order(i));
    }
    return s;
}

std::uint64_t exact_div(Wide num, Wide den, const char* what) {
    if (den == 0 || num % den != 0)
        throw UnsupportedCaseError(std::string("repetition count ") + what +
                                   " is not a whole number");
    return to_u64(num / den);
}

}  // namespace

ConstructionRecipe select_recipe(const FactorSpec& spec, Row1Ordering ordering) {
    int k = spec.factor_count();
    if (k < 2)
        throw UnsupportedCaseError("construction needs at least two factors");
    int s1 = spec.order(0);
    if (s1 != 6 && s1 != 8 && s1 != 10)
        throw UnsupportedCaseError("first factor order must be 6, 8 or 10 (got " +
                                   std::to_string(s1) +
                                   "); it is the factor carried by the nonabelian group");

    std::uint64_t g = 0;
    for (int i = 0; i < k; ++i) g = std::gcd(g, static_cast<std::uint64_t>(spec.order(i)));

    ConstructionRecipe recipe;
    recipe.spec = spec;

    // N per case: L_{k-1} for gcd 2/4, 3 L_{k-1} for gcd 6, 2 L_{k-1} for
    // gcd 3 (the smaller multiples exist but lose the conjugacy property).
    Wide n = 0;
    if (g == 2 || g == 4) {
        recipe.recipe_case = RecipeCase::Gcd2Or4;
        n = compute_L(spec, k - 1);
    } else if (g == 6) {
        for (int i = 0; i < k; ++i) {
            if (spec.order(i) != 6)
                throw UnsupportedCaseError(
                    "the gcd-6 case covers only symmetric designs with every order 6");
        }
        recipe.recipe_case = RecipeCase::Gcd6;
        n = checked_mul(static_cast<Wide>(3), compute_L(spec, k - 1));
    } else if (g == 3) {
        if (s1 != 6)
            throw UnsupportedCaseError("the gcd-3 case covers only 6 x 3 x ... designs");
        for (int i = 1; i < k; ++i) {
            if (spec.order(i) != 3)
                throw UnsupportedCaseError("the gcd-3 case covers only 6 x 3 x ... designs");
        }
        recipe.recipe_case = RecipeCase::Gcd3;
        n = checked_mul(static_cast<Wide>(2), compute_L(spec, k - 1));
    } else {
        throw UnsupportedCaseError("gcd of the orders is " + std::to_string(g) +
                                   "; supported cases need gcd 2, 3, 4 or 6");
    }

    recipe.size = to_u64(n);
    recipe.v.push_back(exact_div(n, static_cast<Wide>(s1), "v_1"));
    Wide prefix = 1;
    for (int j = 2; j <= k; ++j) {
        prefix = checked_mul(prefix, static_cast<Wide>(spec.order(j - 1)));
        recipe.v.push_back(exact_div(n, prefix, "v_j"));
    }

    if (s1 == 6) {
        bool second = (recipe.recipe_case == RecipeCase::Gcd3);
        if (ordering == Row1Ordering::First) second = false;
        if (ordering == Row1Ordering::Second) second = true;
        recipe.row1_ordering = second ? s3_second_ordering() : s3_first_ordering();
        recipe.row1_tag = second ? "S3b" : "S3";
    } else {
        if (ordering != Row1Ordering::CaseDefault)
            throw UsageError("row-1 ordering can only be chosen when the first order is 6");
        if (s1 == 8) {
            recipe.row1_ordering = natural_ordering(make_dihedral(4), "D4");
            recipe.row1_tag = "D4";
        } else {
            recipe.row1_ordering = natural_ordering(make_dihedral(5), "D5");
            recipe.row1_tag = "D5";
        }
    }

    for (const auto& entry : catalog_entries()) {
        if (entry.orders == spec.orders()) {
            recipe.in_catalog = true;
            break;
        }
    }
    return recipe;
}

std::vector<int> fill_row1(const ConstructionRecipe& recipe) {
    int s1 = recipe.spec.order(0);
    std::vector<int> row;
    row.reserve(static_cast<size_t>(recipe.size));
    if (recipe.recipe_case == RecipeCase::Gcd3) {
        // Forward, then backward, alternating over the second S3 listing.
        bool forward = true;
        while (row.size() < recipe.size) {
            for (int i = 0; i < s1 && row.size() < recipe.size; ++i)
                row.push_back(forward ? i : s1 - 1 - i);
            forward = !forward;
        }
    } else {
        for (std::uint64_t rep = 0; rep < recipe.v[0]; ++rep)
            for (int i = 0; i < s1; ++i) row.push_back(i);
    }
    return row;
}

namespace {

// Rows 2..k share one fill: each element of Z_s repeated v_j times, and
// every pass rotates the element sequence one step further
// (012 | 201 | 120 | ...). For a two-level factor a rotation and a reversal
// are the same thing. Identical passes are what the shift rules out: they
// would collide with row 1's period and break the balance of the
// projections that skip a middle factor.
std::vector<int> fill_shifted_row(const ConstructionRecipe& recipe, int j) {
    int s = recipe.spec.order(j - 1);
    std::uint64_t reps = recipe.v[static_cast<size_t>(j - 1)];
    std::vector<int> row;
    row.reserve(static_cast<size_t>(recipe.size));
    int pass = 0;
    while (row.size() < recipe.size) {
        for (int i = 0; i < s && row.size() < recipe.size; ++i) {
            int v = ((i - pass) % s + s) % s;
            for (std::uint64_t r = 0; r < reps && row.size() < recipe.size; ++r)
                row.push_back(v);
        }
        ++pass;
    }
    return row;
}

}  // namespace

std::vector<int> fill_middle_row(const ConstructionRecipe& recipe, int j) {
    int k = recipe.spec.factor_count();
    if (j < 2 || j > k - 1)
        throw UsageError("middle rows are 2..k-1");
    return fill_shifted_row(recipe, j);
}

std::vector<int> fill_last_row(const ConstructionRecipe& recipe) {
    return fill_shifted_row(recipe, recipe.spec.factor_count());
}

OrthogonalArray construct(const ConstructionRecipe& recipe) {
    int k = recipe.spec.factor_count();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(k));
    rows.push_back(fill_row1(recipe));
    for (int j = 2; j <= k - 1; ++j) rows.push_back(fill_middle_row(recipe, j));
    if (k >= 2) rows.push_back(fill_last_row(recipe));

    for (const auto& row : rows) {
        if (row.size() != recipe.size)
            throw std::logic_error("row fill produced " + std::to_string(row.size()) +
                                   " entries instead of " + std::to_string(recipe.size));
    }

    std::vector<int> entries(static_cast<size_t>(recipe.size) * static_cast<size_t>(k));
    for (std::uint64_t c = 0; c < recipe.size; ++c)
        for (int i = 0; i < k; ++i)
            entries[c * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i)] =
                rows[static_cast<size_t>(i)][static_cast<size_t>(c)];

    FiniteGroup first = recipe.row1_ordering.materialize(recipe.row1_tag);
    std::vector<std::string> tags{recipe.row1_tag};
    std::vector<std::vector<std::string>> symbol_sets{first.elements};
    for (int i = 1; i < k; ++i) {
        int s = recipe.spec.order(i);
        tags.push_back("Z" + std::to_string(s));
        std::vector<std::string> labels;
        labels.reserve(static_cast<size_t>(s));
        for (int v = 0; v < s; ++v) labels.push_back(std::to_string(v));
        symbol_sets.push_back(std::move(labels));
    }
    return OrthogonalArray(recipe.spec, std::move(tags), std::move(symbol_sets),
                           std::move(entries));
}

OrthogonalArray construct(const FactorSpec& spec, Row1Ordering ordering) {
    return construct(select_recipe(spec, ordering));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        // gcd 2 or 4, minimal size, 1/2 fractions
        {{6, 2, 2}, 24, 12, "", {1, 2}},
        {{6, 2, 2, 2}, 48, 24, "", {1, 2}},
        {{6, 4, 4}, 96, 48, "", {1, 2}},
        {{6, 4, 4, 4}, 384, 192, "", {1, 2}},
        {{6, 4, 2}, 48, 24, "", {1, 2}},
        {{6, 6, 2}, 72, 36, "", {1, 2}},
        {{6, 6, 4}, 144, 72, "", {1, 2}},
        {{8, 2, 2}, 32, 16, "", {1, 2}},
        {{8, 2, 2, 2}, 64, 32, "", {1, 2}},
        {{8, 2, 2, 2, 2}, 128, 64, "", {1, 2}},
        {{8, 2, 2, 2, 2, 2}, 256, 128, "", {1, 2}},
        {{8, 6, 6}, 288, 144, "", {1, 2}},
        {{8, 6, 6, 6}, 1728, 864, "", {1, 2}},
        {{8, 4, 2}, 64, 32, "", {1, 2}},
        {{8, 6, 2}, 96, 48, "", {1, 2}},
        {{8, 6, 4}, 192, 96, "", {1, 2}},
        {{10, 2, 2}, 40, 20, "", {1, 2}},
        {{10, 2, 2, 2}, 80, 40, "", {1, 2}},
        {{10, 4, 4}, 160, 80, "", {1, 2}},
        {{10, 4, 4, 4}, 640, 320, "", {1, 2}},
        {{10, 6, 6}, 360, 180, "", {1, 2}},
        {{10, 6, 6, 6}, 2160, 1080, "", {1, 2}},
        {{10, 4, 2}, 80, 40, "", {1, 2}},
        {{10, 6, 2}, 120, 60, "", {1, 2}},
        {{10, 6, 4}, 240, 120, "", {1, 2}},
        // gcd 4, 1/4 fractions
        {{8, 4, 4}, 128, 32, "", {1, 4}},
        {{8, 4, 4, 4}, 512, 128, "", {1, 4}},
        // gcd 6, 1/2 fractions of size 3 L_{k-1}
        {{6, 6, 6}, 216, 108, "=3L(k-1)", {1, 2}},
        {{6, 6, 6, 6}, 1296, 648, "=3L(k-1)", {1, 2}},
        // gcd 3, 2/3 fractions of size 2 L_{k-1}
        {{6, 3, 3}, 54, 36, "=2L(k-1)", {2, 3}},
        {{6, 3, 3, 3}, 162, 108, "=2L(k-1)", {2, 3}},
    };
    return entries;
}

std::vector<FiniteGroup> groups_for_array(const OrthogonalArray& d) {
    std::vector<FiniteGroup> groups;
    groups.reserve(d.tags().size());
    for (const auto& tag : d.tags()) groups.push_back(group_from_tag(tag));
    return groups;
}

std::vector<CatalogRow> build_catalog() {
    std::vector<CatalogRow> rows;
    rows.reserve(catalog_entries().size());
    for (const auto& entry : catalog_entries()) {
        FactorSpec spec(entry.orders);
        std::string label = design_label(spec);
        auto fail = [&](const std::string& what) {
            throw CatalogError("catalog row " + label + ": " + what);
        };

        OrthogonalArray array = construct(spec);
        int k = spec.factor_count();
        Wide complete = spec.product();
        if (complete != static_cast<Wide>(entry.complete_size))
            fail("complete design size " + to_string(complete) + " != recorded " +
                 std::to_string(entry.complete_size));
        if (array.size() != entry.array_size)
            fail("array size " + std::to_string(array.size()) + " != recorded " +
                 std::to_string(entry.array_size));
        Fraction frac = fraction_of(array.size(), complete);
        if (!(frac == entry.fraction))
            fail("fraction " + frac.str() + " != recorded " + entry.fraction.str());

        StrengthReport strength = verify_strength(array, k - 1);
        if (!strength.holds) fail("strength " + std::to_string(k - 1) + " does not hold");
        int observed = max_strength(array);
        if (observed != k - 1)
            fail("max strength " + std::to_string(observed) + " != " + std::to_string(k - 1));
        ConjugacyReport conjugacy = verify_conjugacy(array, groups_for_array(array));
        if (!conjugacy.holds) fail("conjugacy condition does not hold");

        // gcd-3 rows are multisets (class-aligned repeats); everything else
        // must be a repetition-free proper fraction.
        bool repetition_free = is_proper_fraction(array);
        ConstructionRecipe recipe = select_recipe(spec);
        if (recipe.recipe_case == RecipeCase::Gcd3) {
            if (repetition_free) fail("gcd-3 array unexpectedly repetition-free");
        } else if (!repetition_free) {
            fail("array is not a proper fraction");
        }
        divisibility_check(array, k - 1);

        rows.push_back(CatalogRow{label, spec, entry.complete_size, entry.array_size, entry.note,
                                  entry.fraction, std::move(array), std::move(strength),
                                  std::move(conjugacy), observed, repetition_free});
    }
    return rows;
}

std::string render_catalog_table(const std::vector<CatalogRow>& rows) {
    std::ostringstream out;
    size_t wd = 6, wc = 8, wa = 5, wn = 4;
    for (const auto& r : rows) {
        wd = std::max(wd, r.design.size());
        wc = std::max(wc, std::to_string(r.complete_size).size());
        wa = std::max(wa, std::to_string(r.array_size).size());
        wn = std::max(wn, r.note.size());
    }
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    out << pad("design", wd) << "  " << pad("complete", wc) << "  " << pad("array", wa) << "  "
        << pad("note", wn) << "  " << "fraction" << "  strength  conjugacy\n";
    for (const auto& r : rows) {
        out << pad(r.design, wd) << "  " << pad(std::to_string(r.complete_size), wc) << "  "
            << pad(std::to_string(r.array_size), wa) << "  " << pad(r.note, wn) << "  "
            << pad(r.fraction.str(), 8) << "  " << pad(std::to_string(r.observed_max_strength), 8)
            << "  " << (r.conjugacy.holds ? "pass" : "FAIL") << "\n";
    }
    return out.str();
}

std::string catalog_to_json(const std::vector<CatalogRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["design"] = r.design;
        row["spec"] = r.spec.orders();
        row["complete_size"] = r.complete_size;
        row["array_size"] = r.array_size;
        row["note"] = r.note;
        row["fraction"] = r.fraction.str();
        row["strength"] = r.observed_max_strength;
        row["conjugacy"] = r.conjugacy.holds;
        j.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["catalog"] = std::move(j);
    doc["provenance"]["tool"] = kToolVersion;
    return doc.dump(2) + "\n";
}

}  // namespace oafrac

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oafrac/groups.hpp"
#include "oafrac/numtheory.hpp"

namespace oafrac {

/// Default ceiling on the number of runs any routine will materialize.
constexpr std::uint64_t kDefaultCapacity = 1u << 20;

/// A k x N multiset of runs. Entries are per-factor symbol indices stored
/// column-major (a run is contiguous); labels appear only at I/O borders.
class OrthogonalArray {
public:
    OrthogonalArray(FactorSpec spec, std::vector<std::string> tags,
                    std::vector<std::vector<std::string>> symbol_sets,
                    std::vector<int> column_major_entries);

    int factor_count() const { return spec_.factor_count(); }
    std::uint64_t size() const { return size_; }
    const FactorSpec& spec() const { return spec_; }
    const std::vector<std::string>& tags() const { return tags_; }
    const std::vector<std::vector<std::string>>& symbol_sets() const { return symbol_sets_; }

    int entry(int factor, std::uint64_t column) const {
        return entries_[column * static_cast<std::uint64_t>(factor_count()) + static_cast<std::uint64_t>(factor)];
    }
    const std::string& label(int factor, std::uint64_t column) const {
        return symbol_sets_[static_cast<size_t>(factor)][static_cast<size_t>(entry(factor, column))];
    }
    std::vector<int> column(std::uint64_t c) const;

    /// Mixed-radix code of a column; columns compare lexicographically
    /// exactly as their codes compare numerically. Only meaningful while
    /// the symbol space prod(s_i) fits in 64 bits.
    std::uint64_t column_code(std::uint64_t c) const;

    bool operator==(const OrthogonalArray&) const = default;

private:
    FactorSpec spec_;
    std::vector<std::string> tags_;
    std::vector<std::vector<std::string>> symbol_sets_;
    std::vector<int> entries_;
    std::uint64_t size_;
};

/// Array over plain Z_{s_i} symbol sets (tags Z2, Z3, ...).
OrthogonalArray make_plain_array(const FactorSpec& spec, std::vector<int> column_major_entries);

struct StrengthWitness {
    std::vector<int> factors;      // 0-based factor indices of the projection
    std::vector<int> cell_a;       // level combination with count_a occurrences
    std::vector<int> cell_b;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
};

/// Outcome of a strength check. When it holds, `lambda` maps every size-t
/// factor subset to its repetition count; when it fails, `witness` names the
/// first projection (subsets in lexicographic order) with two unevenly
/// filled cells.
struct StrengthReport {
    int claimed_t = 0;
    bool holds = false;
    std::map<std::vector<int>, std::uint64_t> lambda;
    std::optional<StrengthWitness> witness;
};

struct ConjugacyWitness {
    std::vector<std::string> run_a;  // two conjugate runs with different multiplicities
    std::vector<std::string> run_b;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
};

/// Outcome of the conjugacy check: the multiset's counting function must be
/// constant on every conjugacy class of the product group. For an array
/// without repeats this says the runs form a union of classes.
struct ConjugacyReport {
    bool holds = false;
    std::optional<ConjugacyWitness> witness;
};

/// Every level combination exactly once, columns in lexicographic order.
OrthogonalArray complete_factorial(const FactorSpec& spec,
                                   std::uint64_t capacity = kDefaultCapacity);

/// Exhaustive check that every size-t projection is uniformly filled.
StrengthReport verify_strength(const OrthogonalArray& d, int t);

/// Largest t for which verify_strength holds; 0 if even t = 1 fails.
int max_strength(const OrthogonalArray& d);

/// Conjugacy check against per-factor groups. groups[i] must list exactly
/// the array's symbol set i in the same order.
ConjugacyReport verify_conjugacy(const OrthogonalArray& d, const std::vector<FiniteGroup>& groups);

/// True iff the array has no repeated run and is smaller than the complete
/// factorial design.
bool is_proper_fraction(const OrthogonalArray& d);

/// True iff every run appears exactly size/L_k times (an exact multiple of
/// the complete design).
bool is_complete_multiple(const OrthogonalArray& d);

/// Rechecks that a strength-t array's size is a multiple of L_t. Throws
/// UsageError when the array does not have strength t, and std::logic_error
/// if the divisibility ever failed (it cannot, short of an internal bug).
bool divisibility_check(const OrthogonalArray& d, int t);

/// Strength-1 array of full-factorial size that is not the complete design:
/// each row is an independently shuffled balanced fill, re-shuffled until
/// some run repeats. Deterministic in `seed`. Requires k >= 2 (for k = 1
/// every balanced fill is the complete design).
OrthogonalArray strength1_noncomplete(const FactorSpec& spec, std::uint64_t seed,
                                      std::uint64_t capacity = kDefaultCapacity);

}  // namespace oafrac

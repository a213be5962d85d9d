#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oafrac/oarray.hpp"

namespace oafrac {

struct SearchOptions {
    std::uint64_t limit = 1;           // stop after this many arrays (0 = all)
    std::uint64_t budget = 1'000'000;  // node ceiling; a node is one attempted placement
    bool exclude_complete = false;     // drop exact multiples of the complete design
    std::uint64_t capacity = 1u << 16; // max distinct columns; search is desk-scale
};

/// What a search run did. `exhausted` means the whole canonical space was
/// enumerated: together with an empty `arrays` it proves nonexistence
/// (within the exclusion rules); `budget_hit` means the run is evidence
/// only. Node counts are deterministic for fixed inputs.
struct SearchOutcome {
    std::vector<OrthogonalArray> arrays;
    std::uint64_t explored = 0;
    bool exhausted = false;
    bool budget_hit = false;
    bool limit_hit = false;
    std::string note;
};

/// Enumerate size-N column multisets in canonical order (runs nondecreasing
/// lexicographically), pruning as soon as any size-t projection cell passes
/// its repetition target lambda_I = N / prod(s_i). Every array returned has
/// strength >= t by construction of the pruning.
///
/// If N is not a multiple of L_t, no strength-t array of that size exists;
/// the search returns immediately with a note and zero explored nodes.
SearchOutcome search_arrays(const FactorSpec& spec, std::uint64_t n, int t,
                            const SearchOptions& options = {});

enum class Uniqueness { Unique, NotUnique, Inconclusive };

const char* to_string(Uniqueness u);

struct UniquenessReport {
    Uniqueness status = Uniqueness::Inconclusive;
    std::optional<OrthogonalArray> witness;  // a non-complete array, when found
    std::uint64_t explored = 0;
    bool exhausted = false;
};

/// Is the complete design the only strength-t array of size L_k? Only asked
/// when t >= d (so L_t = L_k; below d smaller arrays are allowed anyway and
/// the call is a usage error). Runs search_arrays excluding complete
/// multiples: a witness proves "not unique", full exhaustion proves
/// "unique", and a budget stop is inconclusive.
UniquenessReport uniqueness_probe(const FactorSpec& spec, int t,
                                  const SearchOptions& options = {});

}  // namespace oafrac

#include "oafrac/search.hpp"

#include <algorithm>

#include "oafrac/detail/subsets.hpp"
#include "oafrac/errors.hpp"

namespace oafrac {

const char* to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::Unique: return "unique";
        case Uniqueness::NotUnique: return "not unique";
        case Uniqueness::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct Projection {
    std::vector<std::uint64_t> cell_of_column;  // cell index per candidate column
    std::vector<std::uint64_t> counts;
    std::uint64_t target = 0;  // lambda_I
};

struct Searcher {
    const FactorSpec& spec;
    std::uint64_t n;
    std::uint64_t total_columns;
    std::uint64_t max_multiplicity = 1;  // min lambda over projections
    const SearchOptions& options;
    std::vector<Projection> projections;
    std::vector<int> chosen;  // canonical nondecreasing column codes
    SearchOutcome outcome;

    Searcher(const FactorSpec& s, std::uint64_t n_, const SearchOptions& opt)
        : spec(s), n(n_), options(opt) {}

    bool stop() const { return outcome.budget_hit || outcome.limit_hit; }

    void emit() {
        int k = spec.factor_count();
        std::vector<int> entries(static_cast<size_t>(n) * static_cast<size_t>(k));
        for (std::uint64_t c = 0; c < n; ++c) {
            std::uint64_t code = static_cast<std::uint64_t>(chosen[static_cast<size_t>(c)]);
            for (int i = k - 1; i >= 0; --i) {
                std::uint64_t s = static_cast<std::uint64_t>(spec.order(i));
                entries[c * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i)] =
                    static_cast<int>(code % s);
                code /= s;
            }
        }
        OrthogonalArray array = make_plain_array(spec, std::move(entries));
        if (options.exclude_complete && is_complete_multiple(array)) return;
        outcome.arrays.push_back(std::move(array));
        if (options.limit != 0 && outcome.arrays.size() >= options.limit)
            outcome.limit_hit = true;
    }

    void dfs(std::uint64_t min_column) {
        if (chosen.size() == n) {
            emit();
            return;
        }
        for (std::uint64_t col = min_column; col < total_columns && !stop(); ++col) {
            // Columns are nondecreasing and none can appear more than
            // min-lambda times, so once the tail cannot supply the missing
            // runs the whole branch is dead.
            if (n - chosen.size() > (total_columns - col) * max_multiplicity) break;
            if (outcome.explored >= options.budget) {
                outcome.budget_hit = true;
                return;
            }
            ++outcome.explored;

            bool feasible = true;
            for (const auto& p : projections) {
                if (p.counts[p.cell_of_column[col]] >= p.target) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;

            for (auto& p : projections) ++p.counts[p.cell_of_column[col]];
            chosen.push_back(static_cast<int>(col));
            dfs(col);
            chosen.pop_back();
            for (auto& p : projections) --p.counts[p.cell_of_column[col]];
        }
    }
};

}  // namespace

SearchOutcome search_arrays(const FactorSpec& spec, std::uint64_t n, int t,
                            const SearchOptions& options) {
    int k = spec.factor_count();
    if (t < 1 || t > k)
        throw UsageError("strength t=" + std::to_string(t) + " out of range 1.." + std::to_string(k));
    if (n == 0) throw UsageError("array size must be positive");
    if (n > (1u << 26)) throw CapacityError("search size " + std::to_string(n) + " is too large");

    Wide total = spec.product();
    if (total > static_cast<Wide>(options.capacity))
        throw CapacityError("column space " + to_string(total) + " above the limit of " +
                            std::to_string(options.capacity));

    Searcher searcher(spec, n, options);
    searcher.total_columns = static_cast<std::uint64_t>(total);

    // Hard divisibility gate: nothing to explore when L_t does not divide N.
    Wide bound = compute_L(spec, t);
    if (static_cast<Wide>(n) % bound != 0) {
        searcher.outcome.exhausted = true;
        searcher.outcome.note = "size " + std::to_string(n) + " is not a multiple of L_" +
                                std::to_string(t) + " = " + to_string(bound) +
                                "; no strength-" + std::to_string(t) + " array exists";
        return searcher.outcome;
    }

    searcher.max_multiplicity = n;
    auto subset = detail::first_subset(t);
    do {
        Projection p;
        std::uint64_t cells = 1;
        for (int i : subset) cells *= static_cast<std::uint64_t>(spec.order(i));
        p.target = n / cells;
        searcher.max_multiplicity = std::min(searcher.max_multiplicity, p.target);
        p.counts.assign(cells, 0);
        p.cell_of_column.resize(searcher.total_columns);
        for (std::uint64_t col = 0; col < searcher.total_columns; ++col) {
            // Decode the mixed-radix code and keep only the subset digits.
            std::uint64_t code = col;
            std::uint64_t cell = 0;
            std::vector<int> digits(static_cast<size_t>(k));
            for (int i = k - 1; i >= 0; --i) {
                digits[static_cast<size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(spec.order(i)));
                code /= static_cast<std::uint64_t>(spec.order(i));
            }
            for (int i : subset)
                cell = cell * static_cast<std::uint64_t>(spec.order(i)) +
                       static_cast<std::uint64_t>(digits[static_cast<size_t>(i)]);
            p.cell_of_column[col] = cell;
        }
        searcher.projections.push_back(std::move(p));
    } while (detail::next_subset(subset, k));

    searcher.chosen.reserve(static_cast<size_t>(n));
    searcher.dfs(0);
    searcher.outcome.exhausted = !searcher.outcome.budget_hit && !searcher.outcome.limit_hit;
    return searcher.outcome;
}

UniquenessReport uniqueness_probe(const FactorSpec& spec, int t, const SearchOptions& options) {
    int d = compute_d(spec);
    if (t < d)
        throw UsageError("uniqueness is only in question for t >= d = " + std::to_string(d) +
                         "; below d the bound L_t is already smaller than the complete design");

    SearchOptions probe_options = options;
    probe_options.exclude_complete = true;
    probe_options.limit = 1;
    std::uint64_t n = to_u64(spec.product());

    SearchOutcome outcome = search_arrays(spec, n, t, probe_options);
    UniquenessReport report;
    report.explored = outcome.explored;
    report.exhausted = outcome.exhausted;
    if (!outcome.arrays.empty()) {
        report.status = Uniqueness::NotUnique;
        report.witness = std::move(outcome.arrays.front());
    } else if (outcome.exhausted) {
        report.status = Uniqueness::Unique;
    } else {
        report.status = Uniqueness::Inconclusive;
    }
    return report;
}

}  // namespace oafrac

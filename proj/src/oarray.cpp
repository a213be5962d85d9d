#include "oafrac/oarray.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "oafrac/detail/subsets.hpp"
#include "oafrac/errors.hpp"

namespace oafrac {

OrthogonalArray::OrthogonalArray(FactorSpec spec, std::vector<std::string> tags,
                                 std::vector<std::vector<std::string>> symbol_sets,
                                 std::vector<int> column_major_entries)
    : spec_(std::move(spec)),
      tags_(std::move(tags)),
      symbol_sets_(std::move(symbol_sets)),
      entries_(std::move(column_major_entries)) {
    size_t k = static_cast<size_t>(spec_.factor_count());
    if (tags_.size() != k) throw UsageError("array needs one tag per factor");
    if (symbol_sets_.size() != k) throw UsageError("array needs one symbol set per factor");
    for (size_t i = 0; i < k; ++i) {
        if (symbol_sets_[i].size() != static_cast<size_t>(spec_.order(static_cast<int>(i))))
            throw UsageError("symbol set " + std::to_string(i + 1) + " does not match factor order");
    }
    if (entries_.empty() || entries_.size() % k != 0)
        throw UsageError("entry count is not a positive multiple of k");
    size_ = entries_.size() / k;
    for (size_t c = 0; c < size_; ++c)
        for (size_t i = 0; i < k; ++i) {
            int v = entries_[c * k + i];
            if (v < 0 || v >= spec_.order(static_cast<int>(i)))
                throw UsageError("entry out of range in row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(c + 1));
        }
}

std::vector<int> OrthogonalArray::column(std::uint64_t c) const {
    int k = factor_count();
    std::vector<int> col(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) col[static_cast<size_t>(i)] = entry(i, c);
    return col;
}

std::uint64_t OrthogonalArray::column_code(std::uint64_t c) const {
    std::uint64_t code = 0;
    for (int i = 0; i < factor_count(); ++i)
        code = code * static_cast<std::uint64_t>(spec_.order(i)) + static_cast<std::uint64_t>(entry(i, c));
    return code;
}

OrthogonalArray make_plain_array(const FactorSpec& spec, std::vector<int> column_major_entries) {
    std::vector<std::string> tags;
    std::vector<std::vector<std::string>> symbol_sets;
    for (int i = 0; i < spec.factor_count(); ++i) {
        int s = spec.order(i);
        tags.push_back("Z" + std::to_string(s));
        std::vector<std::string> labels;
        labels.reserve(static_cast<size_t>(s));
        for (int v = 0; v < s; ++v) labels.push_back(std::to_string(v));
        symbol_sets.push_back(std::move(labels));
    }
    return OrthogonalArray(spec, std::move(tags), std::move(symbol_sets),
                           std::move(column_major_entries));
}

OrthogonalArray complete_factorial(const FactorSpec& spec, std::uint64_t capacity) {
    Wide n_wide = spec.product();
    if (n_wide > static_cast<Wide>(capacity))
        throw CapacityError("complete factorial has " + to_string(n_wide) +
                            " runs, above the limit of " + std::to_string(capacity));
    std::uint64_t n = static_cast<std::uint64_t>(n_wide);
    int k = spec.factor_count();
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(k));
    std::vector<int> tuple(static_cast<size_t>(k), 0);
    for (std::uint64_t c = 0; c < n; ++c) {
        entries.insert(entries.end(), tuple.begin(), tuple.end());
        for (int i = k - 1; i >= 0; --i) {
            if (++tuple[static_cast<size_t>(i)] < spec.order(i)) break;
            tuple[static_cast<size_t>(i)] = 0;
        }
    }
    return make_plain_array(spec, std::move(entries));
}

StrengthReport verify_strength(const OrthogonalArray& d, int t) {
    int k = d.factor_count();
    if (t < 1 || t > k)
        throw UsageError("strength t=" + std::to_string(t) + " out of range 1.." + std::to_string(k));

    StrengthReport report;
    report.claimed_t = t;
    std::uint64_t n = d.size();

    auto subset = detail::first_subset(t);
    std::vector<std::uint64_t> counts;
    do {
        std::uint64_t cells = 1;
        for (int i : subset) {
            cells *= static_cast<std::uint64_t>(d.spec().order(i));
            if (cells > (1u << 26))
                throw CapacityError("projection has too many cells to count");
        }
        counts.assign(cells, 0);
        for (std::uint64_t c = 0; c < n; ++c) {
            std::uint64_t idx = 0;
            for (int i : subset) idx = idx * static_cast<std::uint64_t>(d.spec().order(i)) +
                                       static_cast<std::uint64_t>(d.entry(i, c));
            ++counts[idx];
        }

        auto decode = [&](std::uint64_t idx) {
            std::vector<int> cell(subset.size());
            for (int j = static_cast<int>(subset.size()) - 1; j >= 0; --j) {
                int s = d.spec().order(subset[static_cast<size_t>(j)]);
                cell[static_cast<size_t>(j)] = static_cast<int>(idx % static_cast<std::uint64_t>(s));
                idx /= static_cast<std::uint64_t>(s);
            }
            return cell;
        };

        for (std::uint64_t j = 1; j < cells; ++j) {
            if (counts[j] != counts[0]) {
                report.holds = false;
                report.lambda.clear();
                report.witness = StrengthWitness{subset, decode(0), decode(j), counts[0], counts[j]};
                return report;
            }
        }
        report.lambda[subset] = counts[0];
    } while (detail::next_subset(subset, k));

    report.holds = true;
    return report;
}

int max_strength(const OrthogonalArray& d) {
    int best = 0;
    for (int t = 1; t <= d.factor_count(); ++t) {
        if (!verify_strength(d, t).holds) break;
        best = t;
    }
    return best;
}

ConjugacyReport verify_conjugacy(const OrthogonalArray& d, const std::vector<FiniteGroup>& groups) {
    int k = d.factor_count();
    if (static_cast<int>(groups.size()) != k)
        throw UsageError("need one group per factor");
    for (int i = 0; i < k; ++i) {
        if (groups[static_cast<size_t>(i)].elements != d.symbol_sets()[static_cast<size_t>(i)])
            throw UsageError("group " + std::to_string(i + 1) + " ('" + groups[static_cast<size_t>(i)].name +
                             "') does not match the array's symbol set " + std::to_string(i + 1));
    }
    // The check walks every treatment combination, so the whole space must
    // be materializable (this also keeps the 64-bit run codes collision-free).
    if (d.spec().product() > static_cast<Wide>(1) << 22)
        throw CapacityError("treatment-combination space too large for the conjugacy check");

    // Multiplicity of every run, keyed by the mixed-radix column code.
    std::unordered_map<std::uint64_t, std::uint64_t> multiplicity;
    for (std::uint64_t c = 0; c < d.size(); ++c) ++multiplicity[d.column_code(c)];
    auto count_of = [&](std::uint64_t code) -> std::uint64_t {
        auto it = multiplicity.find(code);
        return it == multiplicity.end() ? 0 : it->second;
    };

    std::vector<ConjugacyPartition> parts;
    parts.reserve(static_cast<size_t>(k));
    for (const auto& g : groups) parts.push_back(conjugacy_classes(g));

    auto labels_of = [&](const std::vector<int>& tuple) {
        std::vector<std::string> labels(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            labels[static_cast<size_t>(i)] =
                groups[static_cast<size_t>(i)].elements[static_cast<size_t>(tuple[static_cast<size_t>(i)])];
        return labels;
    };
    auto code_of = [&](const std::vector<int>& tuple) {
        std::uint64_t code = 0;
        for (int i = 0; i < k; ++i)
            code = code * static_cast<std::uint64_t>(d.spec().order(i)) +
                   static_cast<std::uint64_t>(tuple[static_cast<size_t>(i)]);
        return code;
    };

    // Classes of the product group are Cartesian products of per-factor
    // classes; walk them in lexicographic class order.
    std::vector<size_t> class_idx(static_cast<size_t>(k), 0);
    ConjugacyReport report;
    while (true) {
        std::vector<size_t> member_idx(static_cast<size_t>(k), 0);
        std::vector<int> first_tuple;
        std::uint64_t first_count = 0;
        bool first = true;
        while (true) {
            std::vector<int> tuple(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                tuple[static_cast<size_t>(i)] =
                    parts[static_cast<size_t>(i)].classes[class_idx[static_cast<size_t>(i)]][member_idx[static_cast<size_t>(i)]];
            std::uint64_t count = count_of(code_of(tuple));
            if (first) {
                first_tuple = tuple;
                first_count = count;
                first = false;
            } else if (count != first_count) {
                report.holds = false;
                report.witness =
                    ConjugacyWitness{labels_of(first_tuple), labels_of(tuple), first_count, count};
                return report;
            }

            int pos = k - 1;
            while (pos >= 0) {
                if (++member_idx[static_cast<size_t>(pos)] <
                    parts[static_cast<size_t>(pos)].classes[class_idx[static_cast<size_t>(pos)]].size())
                    break;
                member_idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }

        int pos = k - 1;
        while (pos >= 0) {
            if (++class_idx[static_cast<size_t>(pos)] < parts[static_cast<size_t>(pos)].classes.size()) break;
            class_idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    report.holds = true;
    return report;
}

namespace {

// Column indices sorted by lexicographic run comparison; safe for any
// symbol-space size, unlike the 64-bit column codes.
std::vector<std::uint64_t> sorted_columns(const OrthogonalArray& d) {
    std::vector<std::uint64_t> idx(static_cast<size_t>(d.size()));
    for (std::uint64_t c = 0; c < d.size(); ++c) idx[static_cast<size_t>(c)] = c;
    int k = d.factor_count();
    std::sort(idx.begin(), idx.end(), [&](std::uint64_t a, std::uint64_t b) {
        for (int i = 0; i < k; ++i) {
            int va = d.entry(i, a), vb = d.entry(i, b);
            if (va != vb) return va < vb;
        }
        return false;
    });
    return idx;
}

bool same_column(const OrthogonalArray& d, std::uint64_t a, std::uint64_t b) {
    for (int i = 0; i < d.factor_count(); ++i)
        if (d.entry(i, a) != d.entry(i, b)) return false;
    return true;
}

}  // namespace

bool is_proper_fraction(const OrthogonalArray& d) {
    if (static_cast<Wide>(d.size()) >= d.spec().product()) return false;
    auto idx = sorted_columns(d);
    for (size_t j = 1; j < idx.size(); ++j)
        if (same_column(d, idx[j - 1], idx[j])) return false;
    return true;
}

bool is_complete_multiple(const OrthogonalArray& d) {
    Wide full = d.spec().product();
    if (static_cast<Wide>(d.size()) % full != 0) return false;
    std::uint64_t want = static_cast<std::uint64_t>(static_cast<Wide>(d.size()) / full);
    auto idx = sorted_columns(d);
    std::uint64_t distinct = 0;
    size_t j = 0;
    while (j < idx.size()) {
        size_t run = 1;
        while (j + run < idx.size() && same_column(d, idx[j], idx[j + run])) ++run;
        if (run != want) return false;
        ++distinct;
        j += run;
    }
    return static_cast<Wide>(distinct) == full;
}

bool divisibility_check(const OrthogonalArray& d, int t) {
    if (!verify_strength(d, t).holds)
        throw UsageError("divisibility check requires an array of strength " + std::to_string(t));
    Wide bound = compute_L(d.spec(), t);
    if (static_cast<Wide>(d.size()) % bound != 0)
        throw std::logic_error("strength-" + std::to_string(t) + " array of size " +
                               std::to_string(d.size()) + " is not a multiple of L_t = " +
                               to_string(bound));
    return true;
}

namespace {

// Fisher-Yates with an explicit draw so the result is identical across
// standard library implementations.
void deterministic_shuffle(std::vector<int>& values, std::mt19937_64& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace

OrthogonalArray strength1_noncomplete(const FactorSpec& spec, std::uint64_t seed,
                                      std::uint64_t capacity) {
    int k = spec.factor_count();
    if (k < 2)
        throw UsageError("with one factor every balanced fill is the complete design");
    Wide n_wide = spec.product();
    if (n_wide > static_cast<Wide>(capacity))
        throw CapacityError("full-factorial size " + to_string(n_wide) + " above the limit of " +
                            std::to_string(capacity));
    std::uint64_t n = static_cast<std::uint64_t>(n_wide);

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<int>> rows(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            row.reserve(static_cast<size_t>(n));
            std::uint64_t copies = n / static_cast<std::uint64_t>(spec.order(i));
            for (int v = 0; v < spec.order(i); ++v)
                row.insert(row.end(), copies, v);
            deterministic_shuffle(row, rng);
        }
        std::vector<int> entries(static_cast<size_t>(n) * static_cast<size_t>(k));
        for (std::uint64_t c = 0; c < n; ++c)
            for (int i = 0; i < k; ++i)
                entries[c * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i)] =
                    rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
        OrthogonalArray candidate = make_plain_array(spec, std::move(entries));
        // Size equals the full factorial, so "complete" just means all runs
        // are distinct; keep only fills with a repeat.
        if (!is_complete_multiple(candidate)) return candidate;
    }
    throw std::logic_error("no non-complete balanced fill found; this should be unreachable");
}

}  // namespace oafrac

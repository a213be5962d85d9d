#include "oafrac/groups.hpp"

#include <algorithm>
#include <cstdint>

#include "oafrac/errors.hpp"

namespace oafrac {

namespace {

constexpr int kMaxProductOrder = 4096;  // n*n table entries; keeps memory sane
constexpr int kAssociativityCheckLimit = 64;

void validate_table(const std::string& name, const std::vector<std::string>& elements,
                    const std::vector<int>& table, int identity) {
    int n = static_cast<int>(elements.size());
    if (n == 0) throw UsageError("group '" + name + "' has no elements");
    if (table.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw UsageError("group '" + name + "' table is not " + std::to_string(n) + "x" +
                         std::to_string(n));
    for (int v : table) {
        if (v < 0 || v >= n)
            throw UsageError("group '" + name + "' table entry out of range");
    }

    // Latin square: every row and column is a permutation of 0..n-1.
    std::vector<char> seen(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[static_cast<size_t>(table[static_cast<size_t>(a) * n + b])] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw UsageError("group '" + name + "' row " + std::to_string(a) +
                             " is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[static_cast<size_t>(table[static_cast<size_t>(b) * n + a])] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw UsageError("group '" + name + "' column " + std::to_string(a) +
                             " is not a permutation");
    }

    if (identity < 0 || identity >= n)
        throw UsageError("group '" + name + "' identity index out of range");
    for (int g = 0; g < n; ++g) {
        if (table[static_cast<size_t>(identity) * n + g] != g ||
            table[static_cast<size_t>(g) * n + identity] != g)
            throw UsageError("group '" + name + "' identity is not neutral");
    }

    if (n <= kAssociativityCheckLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int ab = table[static_cast<size_t>(a) * n + b];
                    int bc = table[static_cast<size_t>(b) * n + c];
                    if (table[static_cast<size_t>(ab) * n + c] != table[static_cast<size_t>(a) * n + bc])
                        throw UsageError("group '" + name + "' is not associative");
                }
    }
}

}  // namespace

int FiniteGroup::inverse(int a) const {
    int n = order();
    for (int b = 0; b < n; ++b) {
        if (mul(a, b) == identity) return b;
    }
    throw std::logic_error("group '" + name + "' has no inverse for element " + std::to_string(a));
}

int FiniteGroup::element_index(std::string_view label) const {
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == label) return static_cast<int>(i);
    }
    return -1;
}

int ConjugacyPartition::class_of(int g) const {
    for (size_t c = 0; c < classes.size(); ++c) {
        for (int m : classes[c]) {
            if (m == g) return static_cast<int>(c);
        }
    }
    return -1;
}

FiniteGroup make_group(std::string name, std::vector<std::string> elements,
                       std::vector<int> table) {
    int identity = -1;
    int n = static_cast<int>(elements.size());
    for (int e = 0; e < n && identity < 0; ++e) {
        bool neutral = true;
        for (int g = 0; g < n; ++g) {
            if (table[static_cast<size_t>(e) * n + g] != g ||
                table[static_cast<size_t>(g) * n + e] != g) {
                neutral = false;
                break;
            }
        }
        if (neutral) identity = e;
    }
    if (identity < 0) throw UsageError("group '" + name + "' has no identity element");
    validate_table(name, elements, table, identity);
    return FiniteGroup{std::move(name), std::move(elements), std::move(table), identity};
}

FiniteGroup make_cyclic(int n) {
    if (n < 2) throw UsageError("cyclic group needs n >= 2");
    std::vector<std::string> elements;
    elements.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) elements.push_back(std::to_string(i));
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return make_group("Z" + std::to_string(n), std::move(elements), std::move(table));
}

namespace {

// Element of Dih_n as f^s r^i. With f r^i f = r^-i:
//   (s1,i1)*(s2,i2) = (s1^s2, i1+i2)      when s2 = 0
//                   = (s1 xor 1, i2-i1)   when s2 = 1
struct DihElem {
    int flip;
    int rot;
};

DihElem dih_mul(const DihElem& a, const DihElem& b, int n) {
    if (b.flip == 0) return {a.flip, (a.rot + b.rot) % n};
    return {a.flip ^ 1, ((b.rot - a.rot) % n + n) % n};
}

FiniteGroup dihedral_with(const std::string& name, int n, const std::vector<DihElem>& order,
                          const std::vector<std::string>& labels) {
    int m = 2 * n;
    auto index_of = [&](const DihElem& e) {
        for (int i = 0; i < m; ++i) {
            if (order[static_cast<size_t>(i)].flip == e.flip && order[static_cast<size_t>(i)].rot == e.rot)
                return i;
        }
        throw std::logic_error("dihedral element missing from ordering");
    };
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a) * m + b] =
                index_of(dih_mul(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)], n));
    return make_group(name, labels, std::move(table));
}

}  // namespace

FiniteGroup make_dihedral(int n) {
    if (n < 3) throw UsageError("dihedral group needs n >= 3");
    if (n == 3) {
        // x = r, y = r^2 (the 3-cycles); a, b, c = the reflections.
        std::vector<DihElem> order = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
        return dihedral_with("S3", 3, order, {"e", "x", "y", "a", "b", "c"});
    }
    if (n == 4) {
        // q = r^2 (half-turn), r/s = quarter-turns; the reflections split
        // into the two classes {f, f r^2} = {a, b} and {f r, f r^3} = {x, y}.
        std::vector<DihElem> order = {{0, 0}, {0, 2}, {0, 1}, {0, 3},
                                      {1, 0}, {1, 2}, {1, 1}, {1, 3}};
        return dihedral_with("D4", 4, order, {"e", "q", "r", "s", "a", "b", "x", "y"});
    }
    if (n == 5) {
        std::vector<DihElem> order = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
                                      {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}};
        return dihedral_with("D5", 5, order,
                             {"e", "a", "b", "c", "d", "v", "w", "x", "y", "z"});
    }
    std::vector<DihElem> order;
    std::vector<std::string> labels;
    order.push_back({0, 0});
    labels.emplace_back("e");
    for (int i = 1; i < n; ++i) {
        order.push_back({0, i});
        labels.push_back("r" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
        order.push_back({1, i});
        labels.push_back("f" + std::to_string(i));
    }
    return dihedral_with("Dih" + std::to_string(n), n, order, labels);
}

GroupOrdering s3_first_ordering() {
    GroupOrdering o;
    o.group = make_dihedral(3);
    o.sequence = {0, 1, 2, 3, 4, 5};
    o.label = "S3-first";
    return o;
}

GroupOrdering s3_second_ordering() {
    GroupOrdering o;
    o.group = make_dihedral(3);
    o.sequence = {0, 3, 4, 5, 1, 2};  // e, a, b, c, x, y
    o.label = "S3-second";
    return o;
}

FiniteGroup GroupOrdering::materialize(std::string new_name) const {
    int n = group.order();
    if (static_cast<int>(sequence.size()) != n)
        throw UsageError("ordering '" + label + "' does not cover the group");
    std::vector<int> position(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) position[static_cast<size_t>(sequence[static_cast<size_t>(i)])] = i;
    std::vector<std::string> elements;
    elements.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) elements.push_back(group.elements[static_cast<size_t>(sequence[static_cast<size_t>(i)])]);
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = position[static_cast<size_t>(
                group.mul(sequence[static_cast<size_t>(a)], sequence[static_cast<size_t>(b)]))];
    return make_group(std::move(new_name), std::move(elements), std::move(table));
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
    int n = g.order();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int h = 0; h < n; ++h) inv[static_cast<size_t>(h)] = g.inverse(h);

    std::vector<char> assigned(static_cast<size_t>(n), 0);
    std::vector<char> in_class(static_cast<size_t>(n), 0);
    ConjugacyPartition partition;
    for (int a = 0; a < n; ++a) {
        if (assigned[static_cast<size_t>(a)]) continue;
        std::fill(in_class.begin(), in_class.end(), 0);
        for (int h = 0; h < n; ++h)
            in_class[static_cast<size_t>(g.mul(g.mul(h, a), inv[static_cast<size_t>(h)]))] = 1;
        std::vector<int> members;
        for (int m = 0; m < n; ++m) {
            if (in_class[static_cast<size_t>(m)]) {
                members.push_back(m);
                assigned[static_cast<size_t>(m)] = 1;
            }
        }
        partition.classes.push_back(std::move(members));
    }
    return partition;
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
    if (factors.empty()) throw UsageError("direct product of no groups");
    std::int64_t n = 1;
    for (const auto& g : factors) {
        n *= g.order();
        if (n > kMaxProductOrder)
            throw CapacityError("product group order exceeds " + std::to_string(kMaxProductOrder));
    }
    int k = static_cast<int>(factors.size());
    int total = static_cast<int>(n);

    auto decompose = [&](int idx, std::vector<int>& out) {
        for (int i = k - 1; i >= 0; --i) {
            int ni = factors[static_cast<size_t>(i)].order();
            out[static_cast<size_t>(i)] = idx % ni;
            idx /= ni;
        }
    };
    auto compose = [&](const std::vector<int>& parts) {
        int idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * factors[static_cast<size_t>(i)].order() + parts[static_cast<size_t>(i)];
        return idx;
    };

    std::string name;
    for (const auto& g : factors) {
        if (!name.empty()) name += "x";
        name += g.name;
    }

    std::vector<std::string> elements;
    elements.reserve(static_cast<size_t>(total));
    std::vector<int> parts(static_cast<size_t>(k));
    for (int idx = 0; idx < total; ++idx) {
        decompose(idx, parts);
        std::string label = "(";
        for (int i = 0; i < k; ++i) {
            if (i > 0) label += ",";
            label += factors[static_cast<size_t>(i)].elements[static_cast<size_t>(parts[static_cast<size_t>(i)])];
        }
        label += ")";
        elements.push_back(std::move(label));
    }

    // Decompose every index once; the table fill below is the hot loop.
    std::vector<int> decomp(static_cast<size_t>(total) * static_cast<size_t>(k));
    for (int idx = 0; idx < total; ++idx) {
        decompose(idx, parts);
        for (int i = 0; i < k; ++i) decomp[static_cast<size_t>(idx) * k + i] = parts[static_cast<size_t>(i)];
    }

    std::vector<int> table(static_cast<size_t>(total) * static_cast<size_t>(total));
    std::vector<int> pc(static_cast<size_t>(k));
    for (int a = 0; a < total; ++a) {
        const int* pa = &decomp[static_cast<size_t>(a) * k];
        for (int b = 0; b < total; ++b) {
            const int* pb = &decomp[static_cast<size_t>(b) * k];
            for (int i = 0; i < k; ++i)
                pc[static_cast<size_t>(i)] = factors[static_cast<size_t>(i)].mul(pa[i], pb[i]);
            table[static_cast<size_t>(a) * static_cast<size_t>(total) + static_cast<size_t>(b)] = compose(pc);
        }
    }
    return make_group(std::move(name), std::move(elements), std::move(table));
}

bool is_abelian(const FiniteGroup& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

FiniteGroup group_from_tag(const std::string& tag) {
    if (tag == "S3") return make_dihedral(3);
    if (tag == "S3b") return s3_second_ordering().materialize("S3b");
    if (tag == "D4") return make_dihedral(4);
    if (tag == "D5") return make_dihedral(5);
    if (tag.size() > 1 && tag[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < tag.size(); ++i) {
            if (tag[i] < '0' || tag[i] > '9') { n = -1; break; }
            n = n * 10 + (tag[i] - '0');
            if (n > 1000) break;
        }
        if (n >= 2 && n <= 1000) return make_cyclic(n);
    }
    throw UsageError("unknown group tag '" + tag + "'");
}

bool is_known_tag(const std::string& tag) {
    try {
        group_from_tag(tag);
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

}  // namespace oafrac

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oafrac {

/// A finite group given by an ordered element list and a multiplication
/// table over element indices. The element order is part of the value: all
/// array output is written in it, and the construction routines consume it.
///
/// Construction via make_group validates the table (Latin square, identity,
/// and, for orders up to 64, exhaustive associativity). Groups are immutable
/// afterwards; multiplication is a table lookup.
struct FiniteGroup {
    std::string name;                    // doubles as the file tag, e.g. "Z6", "S3", "D4"
    std::vector<std::string> elements;   // labels in the fixed order
    std::vector<int> table;              // n*n row-major: table[a*n+b] = a*b
    int identity = 0;

    int order() const { return static_cast<int>(elements.size()); }
    int mul(int a, int b) const { return table[static_cast<size_t>(a) * elements.size() + static_cast<size_t>(b)]; }
    int inverse(int a) const;
    /// Index of a label, or -1 when absent.
    int element_index(std::string_view label) const;
};

/// Conjugacy classes in discovery order: classes appear in order of their
/// smallest element index, and each class lists its members ascending.
/// For the named groups this reproduces the conventional listings, e.g.
/// S3 -> e | x y | a b c and D4 -> e | q | r s | a b | x y.
struct ConjugacyPartition {
    std::vector<std::vector<int>> classes;

    /// Index of the class containing element g.
    int class_of(int g) const;
};

/// A fixed traversal order over a group's elements, kept separate from the
/// group so one group can be written out in several orders.
struct GroupOrdering {
    FiniteGroup group;
    std::vector<int> sequence;  // permutation of element indices
    std::string label;          // e.g. "S3-first", "S3-second"

    /// The same group with elements relisted in `sequence` order.
    FiniteGroup materialize(std::string new_name) const;
};

/// Validates and assembles a group; throws UsageError on a malformed table.
FiniteGroup make_group(std::string name, std::vector<std::string> elements,
                       std::vector<int> table);

/// Z_n, addition mod n, elements labeled 0..n-1. Requires n >= 2.
FiniteGroup make_cyclic(int n);

/// Dihedral group of order 2n (symmetries of the regular n-gon), n >= 3.
///
/// n = 3, 4, 5 come with their conventional short names and labels:
///   S3 = {e, x, y, a, b, c}   x, y the 3-cycles; a, b, c the 2-cycles
///   D4 = {e, q, r, s, a, b, x, y}  q the half-turn, r, s the quarter-turns,
///        a, b the diagonal reflections, x, y the edge-midpoint reflections
///   D5 = {e, a, b, c, d, v, w, x, y, z}  a, d = +-72 deg rotations,
///        b, c = +-144 deg rotations, v..z the reflections
/// Other n get generic labels e, r1.., f0...
FiniteGroup make_dihedral(int n);

/// S3 in its listing order e, x, y, a, b, c.
GroupOrdering s3_first_ordering();

/// S3 reordered class-by-class as e, a, b, c, x, y (tag "S3b").
GroupOrdering s3_second_ordering();

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);

/// Componentwise product group; elements ordered lexicographically in the
/// factor orders and labeled "(g1,g2,...)". Its conjugacy classes are the
/// Cartesian products of the per-factor classes.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

bool is_abelian(const FiniteGroup& g);

/// Group for a file tag: Z2, Z3, ... (any n >= 2), S3, S3b, D4, D5.
FiniteGroup group_from_tag(const std::string& tag);

/// True iff the tag names a supported symbol set.
bool is_known_tag(const std::string& tag);

}  // namespace oafrac

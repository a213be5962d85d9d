#include <algorithm>
#include <set>

#include "oafrac/errors.hpp"
#include "oafrac/groups.hpp"
#include "test_support.hpp"

using namespace oafrac;

namespace {

std::vector<std::vector<std::string>> class_labels(const FiniteGroup& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : conjugacy_classes(g).classes) {
        std::vector<std::string> labels;
        for (int e : cls) labels.push_back(g.elements[static_cast<size_t>(e)]);
        out.push_back(std::move(labels));
    }
    return out;
}

void check_axioms(const FiniteGroup& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        CHECK(g.mul(g.identity, a) == a);
        CHECK(g.mul(a, g.inverse(a)) == g.identity);
    }
}

void check_class_equation(const FiniteGroup& g) {
    auto partition = conjugacy_classes(g);
    int total = 0;
    for (const auto& cls : partition.classes) {
        CHECK(g.order() % static_cast<int>(cls.size()) == 0);
        total += static_cast<int>(cls.size());
    }
    CHECK(total == g.order());
    CHECK(partition.classes.front() == std::vector<int>{g.identity});
}

}  // namespace

TEST_CASE("cyclic groups") {
    FiniteGroup z2 = make_cyclic(2);
    CHECK(z2.table == std::vector<int>{0, 1, 1, 0});
    CHECK(z2.name == "Z2");

    FiniteGroup z3 = make_cyclic(3);
    CHECK(conjugacy_classes(z3).classes == std::vector<std::vector<int>>{{0}, {1}, {2}});

    FiniteGroup z4 = make_cyclic(4);
    CHECK(z4.identity == 0);
    CHECK(z4.inverse(2) == 2);
    CHECK(is_abelian(z4));

    CHECK_THROWS_AS(make_cyclic(1), UsageError);
    check_axioms(make_cyclic(7));
    CHECK(conjugacy_classes(make_cyclic(6)).classes.size() == 6);
}

TEST_CASE("make_group rejects malformed tables") {
    // not a Latin square
    CHECK_THROWS_AS(make_group("bad", {"e", "g"}, {0, 1, 1, 1}), UsageError);
    // the smallest nonassociative loop: a Latin square with identity where
    // (1*1)*2 = 2 but 1*(1*2) = 4
    CHECK_THROWS_AS(make_group("loop5", {"e", "p", "q", "r", "s"},
                               {0, 1, 2, 3, 4,
                                1, 0, 3, 4, 2,
                                2, 3, 4, 0, 1,
                                3, 4, 1, 2, 0,
                                4, 2, 0, 1, 3}),
                    UsageError);
    // Latin square with no neutral element
    CHECK_THROWS_AS(make_group("noid", {"g", "h", "i"}, {1, 2, 0, 0, 1, 2, 2, 0, 1}), UsageError);
}

TEST_CASE("named dihedral groups carry the conventional class listings") {
    FiniteGroup s3 = make_dihedral(3);
    CHECK(s3.name == "S3");
    CHECK(s3.elements == std::vector<std::string>{"e", "x", "y", "a", "b", "c"});
    CHECK(class_labels(s3) ==
          std::vector<std::vector<std::string>>{{"e"}, {"x", "y"}, {"a", "b", "c"}});

    FiniteGroup d4 = make_dihedral(4);
    CHECK(d4.elements == std::vector<std::string>{"e", "q", "r", "s", "a", "b", "x", "y"});
    CHECK(class_labels(d4) == std::vector<std::vector<std::string>>{
                                  {"e"}, {"q"}, {"r", "s"}, {"a", "b"}, {"x", "y"}});

    FiniteGroup d5 = make_dihedral(5);
    CHECK(d5.elements ==
          std::vector<std::string>{"e", "a", "b", "c", "d", "v", "w", "x", "y", "z"});
    CHECK(class_labels(d5) == std::vector<std::vector<std::string>>{
                                  {"e"}, {"a", "d"}, {"b", "c"}, {"v", "w", "x", "y", "z"}});

    for (const auto& g : {s3, d4, d5}) {
        check_axioms(g);
        check_class_equation(g);
        CHECK_FALSE(is_abelian(g));
    }

    CHECK_THROWS_AS(make_dihedral(2), UsageError);
}

TEST_CASE("class sizes of the named groups") {
    auto sizes = [](const FiniteGroup& g) {
        std::vector<size_t> out;
        for (const auto& cls : conjugacy_classes(g).classes) out.push_back(cls.size());
        return out;
    };
    CHECK(sizes(make_dihedral(3)) == std::vector<size_t>{1, 2, 3});
    CHECK(sizes(make_dihedral(5)) == std::vector<size_t>{1, 2, 2, 5});
}

TEST_CASE("generic dihedral group") {
    FiniteGroup d6 = make_dihedral(6);
    CHECK(d6.order() == 12);
    CHECK(d6.name == "Dih6");
    check_axioms(d6);
    check_class_equation(d6);
    CHECK(conjugacy_classes(d6).classes.size() == 6);
}

TEST_CASE("named variants are relabelings of the presentation-built group") {
    // D4's element order maps into the presentation listing e,r1,r2,r3,f0..f3;
    // its table must agree with the presentation under that permutation.
    FiniteGroup d4 = make_dihedral(4);
    std::vector<int> perm = {0, 2, 1, 3, 4, 6, 5, 7};  // named index -> presentation index
    auto mul_pairs = [](std::pair<int, int> a, std::pair<int, int> b, int n) {
        if (b.first == 0) return std::pair<int, int>{a.first, (a.second + b.second) % n};
        return std::pair<int, int>{a.first ^ 1, ((b.second - a.second) % n + n) % n};
    };
    std::vector<std::pair<int, int>> generic_order;
    for (int i = 0; i < 4; ++i) generic_order.push_back({0, i});
    for (int i = 0; i < 4; ++i) generic_order.push_back({1, i});
    auto generic_index = [&](std::pair<int, int> e) {
        for (int i = 0; i < 8; ++i)
            if (generic_order[static_cast<size_t>(i)] == e) return i;
        return -1;
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int expected = generic_index(mul_pairs(generic_order[static_cast<size_t>(perm[static_cast<size_t>(a)])],
                                                   generic_order[static_cast<size_t>(perm[static_cast<size_t>(b)])], 4));
            CHECK(perm[static_cast<size_t>(d4.mul(a, b))] == expected);
        }
}

TEST_CASE("the two S3 orderings") {
    GroupOrdering first = s3_first_ordering();
    GroupOrdering second = s3_second_ordering();
    FiniteGroup s3 = first.materialize("S3");
    FiniteGroup s3b = second.materialize("S3b");
    CHECK(s3.elements == std::vector<std::string>{"e", "x", "y", "a", "b", "c"});
    CHECK(s3b.elements == std::vector<std::string>{"e", "a", "b", "c", "x", "y"});
    CHECK(class_labels(s3b) ==
          std::vector<std::vector<std::string>>{{"e"}, {"a", "b", "c"}, {"x", "y"}});

    // Reordering relabels, it does not change the multiplication.
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            const std::string& la = s3b.elements[static_cast<size_t>(a)];
            const std::string& lb = s3b.elements[static_cast<size_t>(b)];
            int ga = s3.element_index(la);
            int gb = s3.element_index(lb);
            CHECK(s3b.elements[static_cast<size_t>(s3b.mul(a, b))] ==
                  s3.elements[static_cast<size_t>(s3.mul(ga, gb))]);
        }
    check_axioms(s3b);
}

TEST_CASE("direct products") {
    FiniteGroup klein = direct_product({make_cyclic(2), make_cyclic(2)});
    CHECK(klein.order() == 4);
    CHECK(conjugacy_classes(klein).classes.size() == 4);
    for (int g = 0; g < 4; ++g) CHECK(klein.mul(g, g) == klein.identity);
    CHECK(klein.elements[1] == "(0,1)");

    FiniteGroup s3xz2 = direct_product({make_dihedral(3), make_cyclic(2)});
    auto partition = conjugacy_classes(s3xz2);
    std::vector<size_t> sizes;
    for (const auto& cls : partition.classes) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 2, 3, 3});  // {1,2,3} x {1,1}

    FiniteGroup big = direct_product({make_dihedral(4), make_cyclic(2), make_cyclic(2)});
    CHECK(conjugacy_classes(big).classes.size() == 20);  // 5 * 2 * 2
}

TEST_CASE("product classes are Cartesian products of factor classes") {
    std::vector<std::vector<FiniteGroup>> cases = {
        {make_dihedral(3), make_cyclic(2)},
        {make_dihedral(4), make_cyclic(4), make_cyclic(4)},
        {make_dihedral(5), make_cyclic(2), make_cyclic(2)},
        {s3_second_ordering().materialize("S3b"), make_cyclic(3), make_cyclic(3)},
    };
    for (const auto& factors : cases) {
        FiniteGroup product = direct_product(factors);
        auto computed = conjugacy_classes(product);

        // Build the expected partition from per-factor classes.
        std::vector<ConjugacyPartition> parts;
        for (const auto& g : factors) parts.push_back(conjugacy_classes(g));
        std::vector<std::vector<int>> expected;
        std::vector<size_t> class_idx(factors.size(), 0);
        while (true) {
            std::vector<int> members;
            std::vector<size_t> member_idx(factors.size(), 0);
            while (true) {
                int code = 0;
                for (size_t i = 0; i < factors.size(); ++i)
                    code = code * factors[i].order() +
                           parts[i].classes[class_idx[i]][member_idx[i]];
                members.push_back(code);
                size_t pos = factors.size();
                bool done = true;
                while (pos > 0) {
                    --pos;
                    if (++member_idx[pos] < parts[pos].classes[class_idx[pos]].size()) {
                        done = false;
                        break;
                    }
                    member_idx[pos] = 0;
                }
                if (done) break;
            }
            std::sort(members.begin(), members.end());
            expected.push_back(std::move(members));
            size_t pos = factors.size();
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++class_idx[pos] < parts[pos].classes.size()) {
                    done = false;
                    break;
                }
                class_idx[pos] = 0;
            }
            if (done) break;
        }

        auto as_set = [](std::vector<std::vector<int>> classes) {
            std::set<std::vector<int>> s(classes.begin(), classes.end());
            return s;
        };
        CHECK(as_set(computed.classes) == as_set(expected));
    }
}

TEST_CASE("group_from_tag") {
    CHECK(group_from_tag("Z6").order() == 6);
    CHECK(group_from_tag("Z12").elements[11] == "11");
    CHECK(group_from_tag("S3").elements[1] == "x");
    CHECK(group_from_tag("S3b").elements[1] == "a");
    CHECK(group_from_tag("D4").order() == 8);
    CHECK(group_from_tag("D5").order() == 10);
    CHECK_THROWS_AS(group_from_tag("Q8"), UsageError);
    CHECK_THROWS_AS(group_from_tag("Z1"), UsageError);
    CHECK_THROWS_AS(group_from_tag("Zx"), UsageError);
    CHECK(is_known_tag("Z9"));
    CHECK_FALSE(is_known_tag("??"));
}

TEST_CASE("product order capacity") {
    std::vector<FiniteGroup> too_big(4, make_cyclic(10));  // 10^4 > 4096
    CHECK_THROWS_AS(direct_product(too_big), CapacityError);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <wreath/group.hpp>

#include "reference_tables.hpp"

using namespace wreath;

namespace {

GroupElement L0() { return GroupElement::leaf(0); }
GroupElement L1() { return GroupElement::leaf(1); }

}  // namespace

TEST_CASE("identity elements") {
    CHECK(GroupElement::identity(1) == L0());
    CHECK(GroupElement::identity(2) == GroupElement::node(L0(), L0(), 0));
    CHECK(to_leaf_permutation(GroupElement::identity(3)) == LeafPermutation::identity(8));
    CHECK_THROWS_AS(GroupElement::identity(0), std::invalid_argument);
}

TEST_CASE("leaf permutations of the W_2 node elements") {
    // The published representatives pin down the action order: apply the
    // child automorphisms inside their halves, then exchange the halves.
    // The opposite order would give (1 3 2 4) below.
    CHECK(to_leaf_permutation(GroupElement::node(L0(), L0(), 1)).cycle_notation() ==
          "(1 3)(2 4)");
    CHECK(to_leaf_permutation(GroupElement::node(L1(), L0(), 1)).cycle_notation() ==
          "(1 4 2 3)");
    CHECK(to_leaf_permutation(GroupElement::node(L1(), L0(), 0)).cycle_notation() ==
          "(1 2)");
}

TEST_CASE("height-3 swap representative from the published table") {
    // ((1 4 2 3)-element, identity, 1) acts as (1 8 4 6 2 7 3 5).
    const GroupElement quarter = GroupElement::node(L1(), L0(), 1);
    const GroupElement x = GroupElement::node(quarter, GroupElement::identity(2), 1);
    CHECK(to_leaf_permutation(x).cycle_notation() == "(1 8 4 6 2 7 3 5)");
}

TEST_CASE("multiplication matches permutation composition") {
    const GroupElement x = GroupElement::node(L1(), L0(), 1);
    CHECK(multiply(x, x) == GroupElement::node(L1(), L1(), 0));
    CHECK(to_leaf_permutation(multiply(x, x)).cycle_notation() == "(1 2)(3 4)");

    const GroupElement swap2 = GroupElement::node(L0(), L0(), 1);
    CHECK(multiply(swap2, swap2) == GroupElement::identity(2));

    CHECK_THROWS_AS(multiply(GroupElement::identity(2), GroupElement::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("homomorphism onto leaf permutations, all pairs up to n = 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto elems = enumerate_group(n);
        for (const auto& x : elems)
            for (const auto& y : elems) {
                const auto lhs = to_leaf_permutation(multiply(x, y));
                const auto rhs = compose(to_leaf_permutation(x), to_leaf_permutation(y));
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("group laws") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t count = 1ull << GroupElement::bit_count(n);
        std::uniform_int_distribution<std::uint64_t> dist(0, count - 1);
        const GroupElement id = GroupElement::identity(n);
        for (int trial = 0; trial < 200; ++trial) {
            const GroupElement x(n, dist(rng));
            const GroupElement y(n, dist(rng));
            const GroupElement z(n, dist(rng));
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
            CHECK(multiply(x, id) == x);
            CHECK(multiply(id, x) == x);
            CHECK(multiply(x, inverse(x)) == id);
            CHECK(multiply(inverse(x), x) == id);
        }
    }
}

TEST_CASE("inverse examples") {
    CHECK(inverse(GroupElement::identity(3)) == GroupElement::identity(3));
    const GroupElement x = GroupElement::node(L1(), L0(), 1);
    CHECK(to_leaf_permutation(inverse(x)).cycle_notation() == "(1 3 2 4)");
    // order-2 elements with z = 0 and involutive halves are self-inverse
    const GroupElement invol = GroupElement::node(L1(), L1(), 0);
    CHECK(inverse(invol) == invol);
}

TEST_CASE("enumeration sizes and injectivity") {
    CHECK(enumerate_group(1).size() == 2);
    CHECK(enumerate_group(2).size() == 8);
    CHECK(enumerate_group(3).size() == 128);

    const auto w4 = enumerate_group(4);
    CHECK(w4.size() == 32768);
    std::set<std::vector<int>> perms;
    for (const auto& g : w4)
        perms.insert(to_leaf_permutation(g).images());
    CHECK(perms.size() == w4.size());

    CHECK_THROWS_AS(enumerate_group(5), size_limit_error);
    CHECK_THROWS_AS(enumerate_group(0), std::invalid_argument);
}

TEST_CASE("enumeration order is recursive lexicographic") {
    const auto w2 = enumerate_group(2);
    // (left, right, swap) with left most significant
    CHECK(w2[0] == GroupElement::identity(2));
    CHECK(w2[1] == GroupElement::node(L0(), L0(), 1));
    CHECK(w2[2] == GroupElement::node(L0(), L1(), 0));
    CHECK(w2[7] == GroupElement::node(L1(), L1(), 1));
    for (std::size_t i = 0; i < w2.size(); ++i)
        CHECK(element_index(w2[i]) == i);
}

TEST_CASE("cycle notation round trip") {
    for (const auto& row : fixtures::w3_classes()) {
        const auto p = LeafPermutation::from_cycles(row.cycles, 8);
        CHECK(p.cycle_notation() == row.cycles);
    }
    CHECK(LeafPermutation::identity(4).cycle_notation() == "()");
    CHECK_THROWS_AS(LeafPermutation::from_cycles("(1 9)", 8), parse_error);
    CHECK_THROWS_AS(LeafPermutation::from_cycles("(1 2", 8), parse_error);
}

#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "zcu/group.hpp"

using namespace zcu;

namespace {

// Cyclic group of order n as a Cayley table.
std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// Dihedral group of order 8 acting on the square's corners:
// r = rotation (0 1 2 3), s = reflection fixing corner 0.
FiniteGroup make_d4() {
    return from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
}

// Symmetric group S3 from a transposition and a 3-cycle.
FiniteGroup make_s3() {
    return from_generators({{1, 0, 2}, {1, 2, 0}});
}

} // namespace

TEST_CASE("cayley table validation accepts cyclic groups") {
    FiniteGroup G = from_cayley_table(cyclic_table(4));
    CHECK(G.order == 4);
    CHECK(G.identity == 0);
    CHECK(G.inv[1] == 3);
    CHECK(G.inv[2] == 2);
    CHECK(element_order(G, 1) == 4);
    CHECK(element_order(G, 2) == 2);
    CHECK(G.power(1, -1) == 3);
    CHECK(G.power(1, 10) == 2);
    CHECK(G.is_abelian());
}

TEST_CASE("cayley table validation rejects malformed tables") {
    CHECK_THROWS_AS(from_cayley_table({}), NotAGroup);
    CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1}}), NotAGroup);
    CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 2}}), NotAGroup);
    // Latin square violation: repeated value in a row.
    CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 1}}), NotAGroup);
    // Latin square with no two-sided identity.
    CHECK_THROWS_AS(from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), NotAGroup);
}

TEST_CASE("cayley table validation rejects a non-associative loop") {
    // Z6's addition table with two symmetric intercalates swapped: still a
    // commutative Latin square with identity 0 and two-sided inverses, but
    // (1*2)*2 = 2 while 1*(2*2) = 5.
    auto t = cyclic_table(6);
    t[1][2] = t[2][1] = 0;
    t[1][5] = t[5][1] = 3;
    t[4][2] = t[2][4] = 3;
    t[4][5] = t[5][4] = 0;
    CHECK_THROWS_WITH_AS(from_cayley_table(t),
                         doctest::Contains("associativity"), NotAGroup);
}

TEST_CASE("from_generators builds S3 and D4") {
    FiniteGroup S3 = make_s3();
    CHECK(S3.order == 6);
    CHECK(!S3.is_abelian());
    CHECK(S3.generators.size() == 2);
    CHECK(element_order(S3, S3.generators[0]) == 2);
    CHECK(element_order(S3, S3.generators[1]) == 3);

    FiniteGroup D4 = make_d4();
    CHECK(D4.order == 8);
    CHECK(exponent(D4) == 4);
    int order2 = 0;
    for (int x = 0; x < D4.order; ++x)
        if (element_order(D4, x) == 2) ++order2;
    CHECK(order2 == 5);
}

TEST_CASE("from_generators rejects bad input and enforces the cap") {
    CHECK_THROWS_AS(from_generators({}), BadParameter);
    CHECK_THROWS_AS(from_generators({{0, 0, 1}}), BadParameter);
    CHECK_THROWS_AS(from_generators({{1, 0}, {0, 1, 2}}), BadParameter);
}

TEST_CASE("from_generators cap is configurable") {
    CHECK_THROWS_AS(from_generators({{1, 0, 2}, {1, 2, 0}}, 5), CapExceeded);
    CHECK_NOTHROW(from_generators({{1, 0, 2}, {1, 2, 0}}, 6));
}

TEST_CASE("subgroup enumeration of D4 and Q8-like data") {
    FiniteGroup D4 = make_d4();
    auto subs = all_subgroups(D4);
    CHECK(subs.size() == 10);
    auto normals = all_normal_subgroups(D4);
    CHECK(normals.size() == 6);
    // Sorted by (size, members): first is trivial, last is the whole group.
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == 8);
    CHECK(std::is_sorted(subs.begin(), subs.end(),
                         [](const Subgroup& a, const Subgroup& b) { return a < b; }));
    // Size census of D4's subgroups: 1, five of order 2, three of order 4, 8.
    std::vector<int> sizes;
    for (const auto& s : subs) sizes.push_back(s.order());
    CHECK(sizes == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4, 4, 8});

    CHECK(all_subgroups(from_cayley_table(cyclic_table(4))).size() == 3);
    CHECK_THROWS_AS(all_subgroups(D4, 7), CapExceeded);
}

TEST_CASE("center, normalizer, centralizer, core in D4") {
    FiniteGroup D4 = make_d4();
    Subgroup Z = center(D4);
    CHECK(Z.order() == 2);

    // A reflection generates a non-normal subgroup of order 2 whose
    // normalizer is a Klein four-group and whose core is trivial.
    int s = D4.generators[1];
    Subgroup S = subgroup_generated(D4, {s});
    CHECK(S.order() == 2);
    CHECK(!is_normal(D4, S));
    CHECK(normalizer(D4, S).order() == 4);
    CHECK(centralizer(D4, S).order() == 4);
    CHECK(core_of(D4, S).order() == 1);
    CHECK(conjugate_subgroup(D4, S, D4.generators[0]) != S);

    Subgroup R = subgroup_generated(D4, {D4.generators[0]});
    CHECK(R.order() == 4);
    CHECK(is_normal(D4, R));
    CHECK(core_of(D4, R) == R);
    CHECK(commutator_subgroup(D4, whole_group(D4), whole_group(D4)).order() == 2);
}

TEST_CASE("quotient: canonical representatives, kernel, errors") {
    FiniteGroup D4 = make_d4();
    Subgroup Z = center(D4);
    QuotientMap Q = quotient(D4, Z);
    CHECK(Q.group.order == 4);
    CHECK(exponent(Q.group) == 2);  // D4 / Z(D4) is the Klein group
    // Representatives are the least member of each coset, sorted.
    for (int i = 0; i < Q.group.order; ++i) {
        CHECK(Q.projection[Q.section[i]] == i);
        for (int m : Z.members)
            CHECK(Q.section[i] <= D4.mul(Q.section[i], m));
    }
    CHECK(std::is_sorted(Q.section.begin(), Q.section.end()));

    Subgroup S = subgroup_generated(D4, {D4.generators[1]});
    CHECK_THROWS_AS(quotient(D4, S), NotNormal);
}

TEST_CASE("cyclic generator picks the least index") {
    FiniteGroup C6 = from_cayley_table(cyclic_table(6));
    auto g = cyclic_generator(C6);
    REQUIRE(g.has_value());
    CHECK(*g == 1);

    FiniteGroup D4 = make_d4();
    CHECK(!cyclic_generator(D4).has_value());
    Subgroup R = subgroup_generated(D4, {D4.generators[0]});
    auto r = cyclic_generator(D4, R);
    REQUIRE(r.has_value());
    CHECK(element_order(D4, *r) == 4);
}

TEST_CASE("join, intersect, exponent, generating sets") {
    FiniteGroup D4 = make_d4();
    Subgroup S = subgroup_generated(D4, {D4.generators[1]});
    Subgroup R = subgroup_generated(D4, {D4.generators[0]});
    CHECK(join(D4, S, R).order() == 8);
    CHECK(intersect(S, R).order() == 1);
    CHECK(small_generating_set(D4, whole_group(D4)).size() == 2);
    CHECK(exponent(from_cayley_table(cyclic_table(12))) == 12);
}

TEST_CASE("group_of_subgroup reindexes consistently") {
    FiniteGroup D4 = make_d4();
    Subgroup R = subgroup_generated(D4, {D4.generators[0]});
    SubgroupGroup H = group_of_subgroup(D4, R);
    CHECK(H.group.order == 4);
    for (int i = 0; i < H.group.order; ++i)
        for (int j = 0; j < H.group.order; ++j)
            CHECK(H.to_parent[H.group.mul(i, j)] ==
                  D4.mul(H.to_parent[i], H.to_parent[j]));
    auto gen = cyclic_generator(H.group);
    REQUIRE(gen.has_value());
}

TEST_CASE("large-order validation path: cyclic group of order 300") {
    // Exercises the generator-relation associativity proof plus the sampled
    // triples (full O(n^3) is only run up to order 256).
    std::vector<int> cycle(300);
    for (int i = 0; i < 300; ++i) cycle[i] = (i + 1) % 300;
    FiniteGroup G = from_generators({cycle}, 2048);
    CHECK(G.order == 300);
    auto g = cyclic_generator(G);
    REQUIRE(g.has_value());
    CHECK(element_order(G, *g) == 300);
}

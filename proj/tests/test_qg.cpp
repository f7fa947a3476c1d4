#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "zcu/catalog.hpp"
#include "zcu/group.hpp"
#include "zcu/qg.hpp"

using namespace zcu;

namespace {

int idx(const FiniteGroup& G, const std::string& label) {
    for (int i = 0; i < G.order; ++i) {
        if (G.label(i) == label) return i;
    }
    REQUIRE_MESSAGE(false, "no element labelled " << label);
    return -1;
}

// Every nested pair (H, K) with K normal in H must give an idempotent epsilon.
void sweep_epsilon_idempotence(const FiniteGroup& G) {
    std::vector<Subgroup> subs = all_subgroups(G);
    int checked = 0;
    for (const Subgroup& H : subs) {
        for (const Subgroup& K : subs) {
            if (K.order() > H.order() || !H.contains_all(K)) continue;
            if (!is_normal_in(G, K, H)) continue;
            QGElement eps = epsilon(H, K);
            ++checked;
            CHECK_MESSAGE(is_idempotent(eps),
                          "epsilon not idempotent for |H|=" << H.order() << " |K|=" << K.order());
        }
    }
    CHECK(checked > 0);
}

// Conjugating epsilon must agree with building epsilon from the conjugated pair.
void sweep_epsilon_conjugation(const FiniteGroup& G) {
    std::vector<Subgroup> subs = all_subgroups(G);
    for (const Subgroup& H : subs) {
        for (const Subgroup& K : subs) {
            if (K.order() > H.order() || !H.contains_all(K)) continue;
            if (!is_normal_in(G, K, H)) continue;
            QGElement eps = epsilon(H, K);
            for (int t = 0; t < G.order; ++t) {
                Subgroup ht = conjugate_subgroup(G, H, t);
                Subgroup kt = conjugate_subgroup(G, K, t);
                CHECK(conjugate(eps, t) == epsilon(ht, kt));
            }
        }
    }
}

} // namespace

TEST_CASE("group algebra arithmetic") {
    FiniteGroup G = build({"D4"});
    QGElement one = QGElement::one(G);
    QGElement zero = QGElement::zero(G);

    CHECK(zero.is_zero());
    CHECK(one.support_size() == 1);
    CHECK(one.coeff(G.identity) == 1);

    int a = G.generators.at(0);
    int b = G.generators.at(1);
    QGElement xa = QGElement::basis(G, a);
    QGElement xb = QGElement::basis(G, b);

    // Single-element products follow the multiplication table.
    CHECK(multiply(xa, xb) == QGElement::basis(G, G.mul(a, b)));
    CHECK(multiply(one, xa) == xa);
    CHECK(multiply(xa, one) == xa);

    // Addition cancels exactly; the zero coefficient is not stored.
    CHECK(subtract(xa, xa).is_zero());
    QGElement mixed = add(add(xa, xb), scale(-1, xb));
    CHECK(mixed == xa);
    CHECK(mixed.support_size() == 1);

    // Rational coefficients stay in lowest terms.
    QGElement half = scale(mpq_class(2, 4), xa);
    CHECK(half.coeff(a) == mpq_class(1, 2));
    CHECK(half.coeff(a).get_den() == 2);

    // Powers by repeated squaring; a has order 4 in this group.
    CHECK(power(xa, 0) == one);
    CHECK(power(xa, 4) == one);
    CHECK(power(xa, 3) == QGElement::basis(G, G.power(a, 3)));
    CHECK(power(add(one, xa), 2) ==
          add(add(one, scale(2, xa)), QGElement::basis(G, G.power(a, 2))));
    CHECK_THROWS_AS(power(xa, -1), BadParameter);

    // Conjugation permutes basis elements.
    for (int t = 0; t < G.order; ++t) {
        CHECK(conjugate(xa, t) == QGElement::basis(G, G.conj(a, t)));
    }

    // Elements of different parent groups never mix, even for equal groups.
    FiniteGroup G2 = build({"D4"});
    CHECK_THROWS_AS(add(one, QGElement::one(G2)), ParentMismatch);
    CHECK_THROWS_AS(multiply(one, QGElement::one(G2)), ParentMismatch);
}

TEST_CASE("hat of a subgroup") {
    FiniteGroup G = build({"D4"});

    CHECK(hat(trivial_subgroup(G)) == QGElement::one(G));

    QGElement g_hat = hat(whole_group(G));
    CHECK(multiply(g_hat, g_hat) == g_hat);
    CHECK(is_central(g_hat));

    // hat of a cyclic subgroup of order 25 inside the order-125 group.
    FiniteGroup P = build({"ScriptG1", 5});
    int a = idx(P, "a");
    Subgroup A = subgroup_generated(P, {a});
    REQUIRE(A.order() == 25);
    QGElement a_hat = hat(A);
    CHECK(a_hat.support_size() == 25);
    for (int x : A.members) CHECK(a_hat.coeff(x) == mpq_class(1, 25));
    CHECK(is_idempotent(a_hat));
}

TEST_CASE("minimal normal subgroups above a pair") {
    // Cyclic of order 9: unique minimal subgroup.
    FiniteGroup C9 = build({"AbelianP", 0, 0, {9}});
    Subgroup whole = whole_group(C9);
    Subgroup triv = trivial_subgroup(C9);
    std::vector<Subgroup> mins = minimal_normals_above(whole, triv);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 3);

    // H == K gives the empty list.
    CHECK(minimal_normals_above(whole, whole).empty());
    CHECK(minimal_normals_above(triv, triv).empty());

    // Independent oracle: scan every subgroup of G for minimal normals of H/K.
    FiniteGroup G = build({"ScriptG2", 3});
    Subgroup H = whole_group(G);
    Subgroup K = center(G);
    REQUIRE(K.order() == 3);
    std::vector<Subgroup> expected;
    std::vector<Subgroup> subs = all_subgroups(G);
    for (const Subgroup& M : subs) {
        if (M.order() <= K.order() || !M.contains_all(K)) continue;
        if (!is_normal_in(G, M, H)) continue;
        bool minimal = true;
        for (const Subgroup& L : subs) {
            if (L.order() <= K.order() || L.order() >= M.order()) continue;
            if (!L.contains_all(K) || !M.contains_all(L)) continue;
            if (is_normal_in(G, L, H)) {
                minimal = false;
                break;
            }
        }
        if (minimal) expected.push_back(M);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Subgroup> got = minimal_normals_above(H, K);
    REQUIRE(got.size() == expected.size());
    CHECK(got.size() == 4); // the four order-3 subgroups of the 3x3 quotient, lifted
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);

    // Error cases: K not contained in H, and K not normal in H.
    FiniteGroup D = build({"D4"});
    int b = D.generators.at(1);
    Subgroup refl = subgroup_generated(D, {b});
    Subgroup other = subgroup_generated(D, {D.mul(D.power(D.generators.at(0), 2), b)});
    CHECK_THROWS_AS(minimal_normals_above(refl, other), NotNormal);
    CHECK_THROWS_AS(minimal_normals_above(whole_group(D), refl), NotNormal);
}

TEST_CASE("epsilon elements") {
    FiniteGroup D = build({"D4"});
    Subgroup wholeD = whole_group(D);
    CHECK(epsilon(wholeD, wholeD) == hat(wholeD));
    Subgroup zd = center(D);
    CHECK(epsilon(zd, zd) == hat(zd));

    // In the order-27 group with a of order 9: epsilon(<a>, 1) = 1 - hat(<a^3>).
    FiniteGroup G = build({"ScriptG1", 3});
    int a = idx(G, "a");
    Subgroup A = subgroup_generated(G, {a});
    REQUIRE(A.order() == 9);
    QGElement eps = epsilon(A, trivial_subgroup(G));
    Subgroup A3 = subgroup_generated(G, {G.power(a, 3)});
    CHECK(eps == subtract(QGElement::one(G), hat(A3)));
    CHECK(is_idempotent(eps));
    for (const auto& [x, c] : eps.coeffs()) {
        (void)c;
        CHECK(A.contains(x)); // support stays inside H
    }
}

TEST_CASE("epsilon is idempotent for every nested normal pair") {
    sweep_epsilon_idempotence(build({"D4"}));
    sweep_epsilon_idempotence(build({"Q8"}));
    sweep_epsilon_idempotence(build({"H1"}));
    sweep_epsilon_idempotence(build({"H2"}));
    sweep_epsilon_idempotence(build({"AbelianP", 0, 0, {9, 3}}));
    sweep_epsilon_idempotence(build({"ScriptG1", 3}));
    sweep_epsilon_idempotence(build({"ScriptG2", 3}));
    sweep_epsilon_idempotence(build({"G1", 3}));
}

TEST_CASE("epsilon commutes with conjugation") {
    sweep_epsilon_conjugation(build({"D4"}));
    sweep_epsilon_conjugation(build({"Q8"}));
    sweep_epsilon_conjugation(build({"ScriptG2", 3}));
}

TEST_CASE("sum of distinct conjugates of epsilon") {
    FiniteGroup D = build({"D4"});
    Subgroup wholeD = whole_group(D);
    CHECK(e_idempotent(D, wholeD, wholeD) == hat(wholeD));

    // Order-125 group: H = <a^5, b>, K = <b> has norm_G(K) = H of index 5,
    // so there are exactly five distinct conjugates, verified by a direct scan.
    FiniteGroup G = build({"ScriptG1", 5});
    int a = idx(G, "a");
    int b = idx(G, "b");
    Subgroup H = subgroup_generated(G, {G.power(a, 5), b});
    Subgroup K = subgroup_generated(G, {b});
    REQUIRE(H.order() == 25);
    REQUIRE(K.order() == 5);
    Subgroup N = normalizer(G, K);
    REQUIRE(G.order / N.order() == 5);

    QGElement eps = epsilon(H, K);
    std::vector<QGElement> distinct;
    for (int t = 0; t < G.order; ++t) {
        QGElement c = conjugate(eps, t);
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) {
            distinct.push_back(c);
        }
    }
    CHECK(distinct.size() == 5);

    QGElement total = QGElement::zero(G);
    for (const QGElement& c : distinct) total = add(total, c);
    QGElement e = e_idempotent(G, H, K);
    CHECK(e == total);
    CHECK(is_idempotent(e));
    CHECK(is_central(e));

    // The distinct conjugates are mutually orthogonal for this pair.
    for (size_t i = 0; i < distinct.size(); ++i) {
        for (size_t j = i + 1; j < distinct.size(); ++j) {
            CHECK(are_orthogonal(distinct[i], distinct[j]));
        }
    }
}

TEST_CASE("the five central idempotents of the quaternion algebra split") {
    FiniteGroup Q = build({"Q8"});
    int a = Q.generators.at(0);
    int b = Q.generators.at(1);
    int ab = Q.mul(a, b);
    Subgroup whole = whole_group(Q);
    Subgroup A = subgroup_generated(Q, {a});
    Subgroup B = subgroup_generated(Q, {b});
    Subgroup AB = subgroup_generated(Q, {ab});
    REQUIRE(A.order() == 4);
    REQUIRE(B.order() == 4);
    REQUIRE(AB.order() == 4);

    std::vector<QGElement> es = {
        e_idempotent(Q, whole, whole),
        e_idempotent(Q, whole, A),
        e_idempotent(Q, whole, B),
        e_idempotent(Q, whole, AB),
        e_idempotent(Q, A, trivial_subgroup(Q)),
    };
    QGElement total = QGElement::zero(Q);
    for (const QGElement& e : es) {
        CHECK(is_idempotent(e));
        CHECK(is_central(e));
        total = add(total, e);
    }
    CHECK(total == QGElement::one(Q));
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
            CHECK(are_orthogonal(es[i], es[j]));
            CHECK(es[i] != es[j]);
        }
    }
}

TEST_CASE("idempotent and centrality predicates") {
    FiniteGroup D = build({"D4"});
    QGElement one = QGElement::one(D);
    QGElement zero = QGElement::zero(D);
    CHECK(is_idempotent(zero));
    CHECK(is_idempotent(one));

    int a = D.generators.at(0);
    CHECK_FALSE(is_idempotent(QGElement::basis(D, a)));

    QGElement g_hat = hat(whole_group(D));
    CHECK(are_orthogonal(g_hat, subtract(one, g_hat)));
    CHECK_FALSE(are_orthogonal(g_hat, one));

    CHECK(is_central(hat(center(D))));
    CHECK(is_central(zero));
    CHECK_FALSE(is_central(QGElement::basis(D, D.generators.at(1))));
}

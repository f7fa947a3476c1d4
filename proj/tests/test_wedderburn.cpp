#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zcu/catalog.hpp"
#include "zcu/cyclotomic.hpp"
#include "zcu/errors.hpp"
#include "zcu/shoda.hpp"
#include "zcu/wedderburn.hpp"

namespace {

using namespace zcu;

FiniteGroup cat(const std::string& name, int p = 0) {
    return build({name, p, 0, {}});
}

int wp(const FiniteGroup& G, const std::vector<std::pair<int, int>>& w) {
    int x = G.identity;
    for (const auto& [g, e] : w)
        x = G.mul(x, G.power(G.generators.at(static_cast<size_t>(g)), e));
    return x;
}

using Words = std::vector<std::vector<std::pair<int, int>>>;

Subgroup gen_sub(const FiniteGroup& G, const Words& words) {
    std::vector<int> xs;
    for (const auto& w : words) xs.push_back(wp(G, w));
    return subgroup_generated(G, xs);
}

ShodaPairRecord rec_for(const FiniteGroup& G, const Words& hw, const Words& kw) {
    return make_ssp_record(G, gen_sub(G, hw), gen_sub(G, kw));
}

FiniteGroup build_sl23() {
    auto enc = [](int x, int y) { return 3 * x + y - 1; };  // skip (0,0)
    std::vector<int> s(8), t(8);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == 0 && y == 0) continue;
            s[enc(x, y)] = enc((3 - y) % 3, x);
            t[enc(x, y)] = enc((x + y) % 3, y);
        }
    return from_generators({s, t});
}

// Multiset of (total matrix degree, recognized center conductor) over a
// decomposition in which every component must simplify to a matrix ring over
// a recognized cyclotomic field.
using Shape = std::map<std::pair<int, int>, int>;

Shape shape_of(const std::vector<ComponentDescriptor>& comps) {
    Shape s;
    for (const auto& c : comps) {
        REQUIRE(c.simplified.has_value());
        REQUIRE(c.simplified->second.recognized.has_value());
        ++s[{c.simplified->first, *c.simplified->second.recognized}];
    }
    return s;
}

// Family-level contract: every record carries a faithful action whose image
// sizes, coset representative sets, and fixed fields are mutually
// consistent; the rank matches; the component dimensions add up to |G|.
// Returns the decomposition for further shape checks.
std::vector<ComponentDescriptor> check_family(const FiniteGroup& G, long long expected_rank) {
    SspFamily fam = compute_ssp_family(G, 2500);
    REQUIRE(fam.complete);
    for (const ShodaPairRecord& rec : fam.records) {
        ActionImage img = action_image(rec);
        CHECK(img.q == rec.q);
        CHECK(img.order == rec.N.order() / rec.H.order());
        CHECK(static_cast<int>(img.residues.size()) == img.order);
        for (size_t i = 0; i < img.gens.size(); ++i) {
            int n = img.gen_reps[i];
            int y = G.mul(G.inv[n], G.mul(rec.g, n));
            CHECK(rec.coset_exponent.at(y) == img.gens[i]);
        }
        FixedFieldDescriptor f = fixed_field(img);
        CHECK(static_cast<long long>(f.degree) * img.order == euler_phi(rec.q));
        if (f.recognized) CHECK(euler_phi(*f.recognized) == f.degree);

        std::vector<int> I = i_set(rec);
        REQUIRE(!I.empty());
        CHECK(I.front() == 1);
        if (rec.q > 2) {
            std::vector<long long> gens(img.residues.begin(), img.residues.end());
            gens.push_back(rec.q - 1);
            auto M = residue_subgroup(rec.q, gens);
            CHECK(static_cast<long long>(I.size()) * static_cast<long long>(M.size()) ==
                  euler_phi(rec.q));
            for (int k : I) {
                CHECK(k >= 1);
                CHECK(2 * k <= rec.q);
                CHECK(std::gcd(k, rec.q) == 1);
            }
        } else {
            CHECK(I == std::vector<int>{1});
        }
    }
    CHECK(rank_central_units(fam) == expected_rank);
    std::vector<ComponentDescriptor> comps = decomposition(fam);
    long long total = 0;
    for (const auto& c : comps) total += component_dimension(c);
    CHECK(total == G.order);
    return comps;
}

Shape shape_g(const std::string& name, int p) {
    const int p2 = p * p;
    if (name == "ScriptG1" || name == "ScriptG2")
        return {{{1, 1}, 1}, {{1, p}, p + 1}, {{p, p}, 1}};
    if (name == "G1") return {{{1, 1}, 1}, {{1, p}, 1 + p}, {{1, p2}, p}, {{p, p2}, 1}};
    if (name == "G2") return {{{1, 1}, 1}, {{1, p}, 1 + p + p2}, {{p, p2}, 1}};
    if (name == "G3" || name == "G5")
        return {{{1, 1}, 1}, {{1, p}, 1 + p}, {{1, p2}, p}, {{p, p}, p}};
    if (name == "G4" || name == "G9") return {{{1, 1}, 1}, {{1, p}, 1 + p + p2}, {{p, p}, p}};
    if (name == "G6") return {{{1, 1}, 1}, {{1, p}, 1 + p}, {{p, p}, 1 + p}};
    if (name == "G7" || name == "G8")
        return {{{1, 1}, 1}, {{1, p}, 1 + p}, {{p, p}, 1}, {{p, p2}, 1}};
    if (name == "G10" && p == 3) return {{{1, 1}, 1}, {{1, 3}, 4}, {{3, 3}, 1}, {{3, 9}, 1}};
    if (name == "G10") return {{{1, 1}, 1}, {{1, p}, 1 + p}, {{p, p}, 1 + p}};
    REQUIRE(false);
    return {};
}

long long rank_g(const std::string& name, int p) {
    const long long q = p;
    if (name == "ScriptG1" || name == "ScriptG2") return (q - 3) * (q + 2) / 2;
    if (name == "G1") return (q + 1) * (q * q - 5) / 2;
    if (name == "G2") return (q * q * q - q * q - 3 * q - 5) / 2;
    if (name == "G3" || name == "G5") return (q * q * q + q * q - 7 * q - 3) / 2;
    if (name == "G4" || name == "G9") return (q - 3) * (q + 1) * (q + 1) / 2;
    if (name == "G6") return (q - 3) * (q + 1);
    if (name == "G7" || name == "G8") return q * q - q - 4;
    if (name == "G10" && p == 3) return 2;
    if (name == "G10") return (q - 3) * (q + 1);
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("conjugation action images on hand-built records") {
    SUBCASE("the whole-group pair acts trivially with conductor 1") {
        FiniteGroup G = cat("D4");
        ShodaPairRecord rec = make_ssp_record(G, whole_group(G), whole_group(G));
        ActionImage img = action_image(rec);
        CHECK(img.q == 1);
        CHECK(img.order == 1);
        CHECK(img.residues == std::vector<int>{0});
        CHECK(img.gens.empty());
        CHECK(img.structure == ActionStructure::trivial_action);
        CHECK(img.structure_r == 0);
    }
    SUBCASE("a cyclic group acts trivially on itself") {
        FiniteGroup G = build({"AbelianP", 3, 0, {9}});
        ShodaPairRecord rec = make_ssp_record(G, whole_group(G), trivial_subgroup(G));
        ActionImage img = action_image(rec);
        CHECK(img.q == 9);
        CHECK(img.order == 1);
        CHECK(img.residues == std::vector<int>{1});
        CHECK(img.structure == ActionStructure::trivial_action);
    }
    SUBCASE("the faithful pair of the first order-81 family") {
        FiniteGroup G = cat("G1", 3);
        ShodaPairRecord rec = rec_for(G, {{{0, 1}}}, {});
        REQUIRE(rec.q == 27);
        ActionImage img = action_image(rec);
        CHECK(img.order == 3);
        CHECK(img.residues == std::vector<int>{1, 10, 19});
        CHECK(img.structure == ActionStructure::cyclic);
        CHECK(img.structure_r == 10);  // smallest generator, = 1 + 3^2
        REQUIRE(img.gens.size() == 1);
        CHECK((img.gens[0] == 10 || img.gens[0] == 19));
    }
    SUBCASE("the faithful pair of the first order-16 group inverts the cycle") {
        FiniteGroup G = cat("H1");
        ShodaPairRecord rec = rec_for(G, {{{0, 1}}}, {});
        REQUIRE(rec.q == 8);
        ActionImage img = action_image(rec);
        CHECK(img.order == 2);
        CHECK(img.residues == std::vector<int>{1, 7});
        CHECK(img.structure == ActionStructure::cyclic);
        CHECK(img.structure_r == 7);
    }
    SUBCASE("a pair whose action collapses is rejected") {
        FiniteGroup G = build({"AbelianP", 3, 0, {3, 3}});
        ShodaPairRecord rec = rec_for(G, {{{0, 1}}}, {});
        CHECK_THROWS_AS(action_image(rec), ActionNotFaithful);
    }
}

TEST_CASE("fixed fields of the acting subgroups") {
    SUBCASE("index-p subgroup of the units mod p^3 fixes the conductor-p^2 subfield") {
        FiniteGroup G = cat("G1", 3);
        ActionImage img = action_image(rec_for(G, {{{0, 1}}}, {}));
        FixedFieldDescriptor f = fixed_field(img);
        CHECK(f.q == 27);
        CHECK(f.subgroup == std::vector<int>{1, 10, 19});
        CHECK(f.degree == 6);
        REQUIRE(f.recognized.has_value());
        CHECK(*f.recognized == 9);
    }
    SUBCASE("complex conjugation on the eighth roots fixes a non-cyclotomic field") {
        FiniteGroup G = cat("H1");
        ActionImage img = action_image(rec_for(G, {{{0, 1}}}, {}));
        FixedFieldDescriptor f = fixed_field(img);
        CHECK(f.q == 8);
        CHECK(f.degree == 2);
        CHECK_FALSE(f.recognized.has_value());
    }
    SUBCASE("a trivial action fixes the whole cyclotomic field") {
        FiniteGroup G = build({"AbelianP", 3, 0, {9}});
        ActionImage img = action_image(make_ssp_record(G, whole_group(G), trivial_subgroup(G)));
        FixedFieldDescriptor f = fixed_field(img);
        CHECK(f.degree == 6);
        REQUIRE(f.recognized.has_value());
        CHECK(*f.recognized == 9);
    }
    SUBCASE("the full unit group fixes exactly the rationals") {
        FiniteGroup G = cat("D4");
        ActionImage img = action_image(rec_for(G, {{{0, 1}}}, {}));
        REQUIRE(img.q == 4);
        REQUIRE(img.residues == std::vector<int>{1, 3});
        FixedFieldDescriptor f = fixed_field(img);
        CHECK(f.degree == 1);
        REQUIRE(f.recognized.has_value());
        CHECK(*f.recognized == 1);
    }
}

TEST_CASE("coset representative sets") {
    SUBCASE("conductors one and two give the singleton") {
        FiniteGroup G = cat("D4");
        CHECK(i_set(make_ssp_record(G, whole_group(G), whole_group(G))) == std::vector<int>{1});
        ShodaPairRecord rec = make_ssp_record(G, whole_group(G), gen_sub(G, {{{0, 1}}}));
        REQUIRE(rec.q == 2);
        CHECK(i_set(rec) == std::vector<int>{1});
    }
    SUBCASE("conductor five with trivial action") {
        FiniteGroup G = cat("ScriptG1", 5);
        ShodaPairRecord rec = rec_for(G, {{{0, 5}}, {{1, 1}}}, {{{1, 1}}});
        REQUIRE(rec.q == 5);
        CHECK(i_set(rec) == std::vector<int>{1, 2});
    }
    SUBCASE("conductor eight with inversion") {
        FiniteGroup G = cat("H1");
        CHECK(i_set(rec_for(G, {{{0, 1}}}, {})) == std::vector<int>{1, 3});
    }
    SUBCASE("conductor twenty-seven with an order-three action") {
        FiniteGroup G = cat("G1", 3);
        CHECK(i_set(rec_for(G, {{{0, 1}}}, {})) == std::vector<int>{1, 2, 4});
    }
}

TEST_CASE("simple components from individual records") {
    SUBCASE("outer matrix degree with trivial action") {
        FiniteGroup G = cat("G2", 3);
        ShodaPairRecord rec = rec_for(G, {{{0, 1}}, {{1, 1}}}, {{{1, 1}}});
        REQUIRE(rec.q == 9);
        ComponentDescriptor c = component(rec);
        CHECK(c.outer_degree == 3);
        CHECK(c.action.structure == ActionStructure::trivial_action);
        REQUIRE(c.simplified.has_value());
        CHECK(c.simplified->first == 3);
        REQUIRE(c.simplified->second.recognized.has_value());
        CHECK(*c.simplified->second.recognized == 9);
        CHECK(c.cocycle.size() == 1);
    }
    SUBCASE("inner matrix degree from a trivialized faithful action") {
        FiniteGroup G = cat("G1", 3);
        ComponentDescriptor c = component(rec_for(G, {{{0, 1}}}, {}));
        CHECK(c.outer_degree == 1);
        CHECK(c.action.order == 3);
        REQUIRE(c.simplified.has_value());
        CHECK(c.simplified->first == 3);
        REQUIRE(c.simplified->second.recognized.has_value());
        CHECK(*c.simplified->second.recognized == 9);
        CHECK(c.cocycle.size() == 9);
        CHECK(component_dimension(c) == 54);
    }
    SUBCASE("the dihedral group of order eight splits over the rationals") {
        FiniteGroup G = cat("D4");
        ComponentDescriptor c = component(rec_for(G, {{{0, 1}}}, {}));
        REQUIRE(c.simplified.has_value());
        CHECK(c.simplified->first == 2);
        REQUIRE(c.simplified->second.recognized.has_value());
        CHECK(*c.simplified->second.recognized == 1);
    }
    SUBCASE("the quaternion group of order eight does not split") {
        FiniteGroup G = cat("Q8");
        ComponentDescriptor c = component(rec_for(G, {{{0, 1}}}, {}));
        REQUIRE(c.q == 4);
        CHECK_FALSE(c.simplified.has_value());
        CHECK(c.cocycle.at({3, 3}) == 2);  // the lift of inversion squares to a^2
        CHECK(c.cocycle.at({1, 1}) == 0);
        CHECK(c.cocycle.at({1, 3}) == 0);
        CHECK(c.cocycle.at({3, 1}) == 0);
        CHECK(component_dimension(c) == 4);
    }
    SUBCASE("the order-sixteen quaternionic group does not split") {
        FiniteGroup G = cat("H2");
        ComponentDescriptor c = component(rec_for(G, {{{0, 1}}}, {}));
        REQUIRE(c.q == 8);
        CHECK_FALSE(c.simplified.has_value());
        CHECK(c.cocycle.at({7, 7}) == 4);  // every lift squares to a^4
        CHECK(component_dimension(c) == 8);
    }
    SUBCASE("the order-sixteen semidihedral-like group splits over a real quadratic field") {
        FiniteGroup G = cat("H1");
        ComponentDescriptor c = component(rec_for(G, {{{0, 1}}}, {}));
        REQUIRE(c.simplified.has_value());
        CHECK(c.simplified->first == 2);
        CHECK_FALSE(c.simplified->second.recognized.has_value());
        CHECK(c.simplified->second.degree == 2);
        CHECK(component_dimension(c) == 8);
    }
}

TEST_CASE("decompositions of the fixed small groups") {
    SUBCASE("dihedral of order eight") {
        auto comps = check_family(cat("D4"), 0);
        CHECK(shape_of(comps) == Shape{{{1, 1}, 4}, {{2, 1}, 1}});
        CHECK(decomposition_string(comps) == "Q^4 + M2(Q)");
    }
    SUBCASE("quaternion of order eight") {
        auto comps = check_family(cat("Q8"), 0);
        int plain = 0, twisted = 0;
        for (const auto& c : comps) (c.simplified ? plain : twisted) += 1;
        CHECK(plain == 4);
        CHECK(twisted == 1);
        CHECK(decomposition_string(comps) == "Q^4 + X(outer=1,q=4,m=2)");
    }
    SUBCASE("first order-sixteen group") {
        auto comps = check_family(cat("H1"), 1);
        CHECK(decomposition_string(comps) == "Q^4 + M2(Q) + M2(F(q=8,deg=2))");
    }
    SUBCASE("second order-sixteen group") {
        auto comps = check_family(cat("H2"), 1);
        CHECK(decomposition_string(comps) == "Q^4 + M2(Q) + X(outer=1,q=8,m=2)");
    }
    SUBCASE("an abelian group decomposes into one field per cyclic quotient") {
        FiniteGroup G = build({"AbelianP", 3, 0, {9, 3}});
        auto comps = check_family(G, 6);  // three conductor-9 fields, rank two each
        CHECK(shape_of(comps) == Shape{{{1, 1}, 1}, {{1, 3}, 4}, {{1, 9}, 3}});
        CHECK(decomposition_string(comps) == "Q + Q(z3)^4 + Q(z9)^3");
    }
    SUBCASE("a cyclic group of order five") {
        FiniteGroup G = build({"AbelianP", 5, 0, {5}});
        auto comps = check_family(G, 1);
        CHECK(shape_of(comps) == Shape{{{1, 1}, 1}, {{1, 5}, 1}});
        CHECK(decomposition_string(comps) == "Q + Q(z5)");
    }
}

TEST_CASE("rank and decomposition for the order-p^3 families") {
    for (const std::string name : {"ScriptG1", "ScriptG2"}) {
        for (int p : {3, 5, 7}) {
            CAPTURE(name);
            CAPTURE(p);
            auto comps = check_family(cat(name, p), rank_g(name, p));
            CHECK(shape_of(comps) == shape_g(name, p));
        }
    }
}

TEST_CASE("rank and decomposition for the order-p^4 families at p=3") {
    for (int i = 1; i <= 10; ++i) {
        std::string name = "G" + std::to_string(i);
        CAPTURE(name);
        auto comps = check_family(cat(name, 3), rank_g(name, 3));
        CHECK(shape_of(comps) == shape_g(name, 3));
    }
}

TEST_CASE("rank and decomposition for the order-p^4 families at p=5") {
    for (int i = 1; i <= 10; ++i) {
        std::string name = "G" + std::to_string(i);
        CAPTURE(name);
        auto comps = check_family(cat(name, 5), rank_g(name, 5));
        CHECK(shape_of(comps) == shape_g(name, 5));
    }
}

TEST_CASE("rank and decomposition for the order-p^4 families at p=7") {
    for (int i = 1; i <= 10; ++i) {
        std::string name = "G" + std::to_string(i);
        CAPTURE(name);
        auto comps = check_family(cat(name, 7), rank_g(name, 7));
        CHECK(shape_of(comps) == shape_g(name, 7));
    }
}

TEST_CASE("rank and decomposition require a complete family") {
    FiniteGroup G = build_sl23();
    SspFamily fam = compute_ssp_family(G);
    REQUIRE_FALSE(fam.complete);
    CHECK_THROWS_AS(rank_central_units(fam), IncompleteFamily);
    CHECK_THROWS_AS(decomposition(fam), IncompleteFamily);
}

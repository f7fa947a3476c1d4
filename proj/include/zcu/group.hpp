#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zcu/errors.hpp"

namespace zcu {

// A finite group given by its full multiplication table.  Elements are the
// indices 0..order-1; the table is stored row-major so mul() is a single
// lookup.  Instances are plain values, but Subgroup and QuotientMap keep a
// pointer to their parent: keep the parent alive (and at a stable address)
// for as long as anything derived from it is in use.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table;        // order*order entries, table[x*order+y] = x*y
    std::vector<int> inv;          // inv[x]*x == x*inv[x] == identity
    int identity = 0;
    std::vector<std::string> labels;     // optional element names (may be empty)
    std::vector<int> generators;         // optional preferred generating set

    int mul(int x, int y) const { return table[static_cast<size_t>(x) * order + y]; }
    // x^e for any integer exponent (negative exponents use inv[]).
    int power(int x, long long e) const;
    // t^-1 * x * t
    int conj(int x, int t) const { return mul(mul(inv[t], x), t); }
    bool is_abelian() const;
    std::string label(int x) const;      // stored label or "g<index>"
};

// Validates a square multiplication table and builds a FiniteGroup.
// Checks: well-formed entries, Latin-square rows/columns, a two-sided
// identity, two-sided inverses, and associativity.  Associativity is proved
// by the full triple loop up to order 256; above that, (x*y)*g == x*(y*g) is
// checked for all x, y and all g in a computed generating set, which extends
// to every triple by induction on the word length of the third factor.  A
// fixed-seed random sample of a million extra triples is checked as well.
// Throws NotAGroup with a concrete witness in the message.
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);

// Builds the group generated by permutations of a common finite set.  Each
// permutation is given as images p[0..deg-1] (a bijection on 0..deg-1).
// Products are composed left-to-right: (p*q)(i) = q[p[i]], matching mul().
// Element 0 is the identity; generators[] records the input permutations.
// Throws CapExceeded if the closure grows past `cap`, BadParameter on
// malformed input.
FiniteGroup from_generators(const std::vector<std::vector<int>>& perms, int cap = 2048);

// A subgroup is a sorted member list plus a pointer to the parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;      // strictly increasing element indices

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;    // binary search
    bool contains_all(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
    // Orders by (size, lexicographic member list); used for all deterministic
    // subgroup orderings in the library.
    bool operator<(const Subgroup& o) const;
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);
// Smallest (greedily chosen, deterministic) generating set of a subgroup:
// repeatedly adds the least element not yet generated.
std::vector<int> small_generating_set(const FiniteGroup& G, const Subgroup& H);
// Generating set for the whole group: generators[] if set, else greedy.
std::vector<int> generating_set(const FiniteGroup& G);

int element_order(const FiniteGroup& G, int x);
// Least common multiple of all element orders.
int exponent(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);
// {t in G : K^t == K}
Subgroup normalizer(const FiniteGroup& G, const Subgroup& K);
// {t in G : t commutes with every member of K}
Subgroup centralizer(const FiniteGroup& G, const Subgroup& K);
// Intersection of all conjugates of K: the largest normal subgroup inside K.
Subgroup core_of(const FiniteGroup& G, const Subgroup& K);
// t^-1 K t
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& K, int t);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
// Subgroup generated by A and B together.
Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
// Subgroup generated by all commutators [a,b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
bool is_normal(const FiniteGroup& G, const Subgroup& K);
// K normalized by H (both subgroups of G).
bool is_normal_in(const FiniteGroup& G, const Subgroup& K, const Subgroup& H);

// If the subgroup is cyclic, returns its generator of least element index;
// otherwise nullopt.
std::optional<int> cyclic_generator(const FiniteGroup& G, const Subgroup& S);
std::optional<int> cyclic_generator(const FiniteGroup& G);

// Every subgroup, sorted by (size, member list).  Built as the join-closure
// of the cyclic subgroups.  Throws CapExceeded if G.order > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int cap = 1296);
// Every normal subgroup, sorted the same way.  For order <= 256 this filters
// all_subgroups; for larger groups it is built directly as the join-closure
// of the normal closures of single elements, which reaches every normal
// subgroup (each one is the join of the normal closures of its members).
std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& G, int cap = 1296);

// Quotient G/N with a canonical element order: coset i is represented by
// section[i], the least parent element of that coset, and cosets are sorted
// by representative.  projection[] maps parent elements to coset indices.
struct QuotientMap {
    const FiniteGroup* source = nullptr;
    Subgroup kernel;
    FiniteGroup group;             // the quotient itself
    std::vector<int> projection;   // source element -> quotient element
    std::vector<int> section;      // quotient element -> least coset member
};
QuotientMap quotient(const FiniteGroup& G, const Subgroup& N);

// A subgroup re-indexed as a standalone FiniteGroup, with both directions of
// the index translation.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;              // local index -> parent index
    std::unordered_map<int, int> from_parent;
};
SubgroupGroup group_of_subgroup(const FiniteGroup& G, const Subgroup& H);

// Internal helper shared with tests: deterministic 64-bit stream used for
// the sampled associativity triples (SplitMix64, seed 0x9E3779B97F4A7C15).
uint64_t splitmix64_next(uint64_t& state);

} // namespace zcu

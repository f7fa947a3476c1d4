#include "zcu/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zcu {

uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int FiniteGroup::power(int x, long long e) const {
    if (e < 0) {
        x = inv[x];
        e = -e;
    }
    int acc = identity;
    int base = x;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1ull) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

std::string FiniteGroup::label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty())
        return labels[x];
    return "g" + std::to_string(x);
}

namespace {

// Greedy generating set of the full group: repeatedly add the least element
// outside the closure so far.  Deterministic.
std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<char> in_closure(G.order, 0);
    in_closure[G.identity] = 1;
    int covered = 1;
    while (covered < G.order) {
        int next = -1;
        for (int x = 0; x < G.order; ++x)
            if (!in_closure[x]) { next = x; break; }
        gens.push_back(next);
        in_closure[next] = 1;
        ++covered;
        // Re-close under right multiplication by the enlarged generator set.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < G.order; ++x) {
                if (!in_closure[x]) continue;
                for (int g : gens) {
                    int y = G.mul(x, g);
                    if (!in_closure[y]) { in_closure[y] = 1; ++covered; changed = true; }
                }
            }
        }
    }
    return gens;
}

void check_associativity(const FiniteGroup& G) {
    const int n = G.order;
    if (n <= 256) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int xy = G.mul(x, y);
                for (int z = 0; z < n; ++z)
                    if (G.mul(xy, z) != G.mul(x, G.mul(y, z)))
                        throw NotAGroup("associativity fails at (" + std::to_string(x) +
                                        ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
            }
        return;
    }
    // Large table: prove associativity from a generating set.  If
    // (x*y)*g == x*(y*g) for all x, y and all generators g, then by
    // induction on the word length of z (every z is a product of
    // generators), (x*y)*z == x*(y*z) for all triples.
    std::vector<int> gens = greedy_generators(G);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = G.mul(x, y);
            for (int g : gens)
                if (G.mul(xy, g) != G.mul(x, G.mul(y, g)))
                    throw NotAGroup("associativity fails at (" + std::to_string(x) +
                                    ", " + std::to_string(y) + ", " + std::to_string(g) + ")");
        }
    // Belt-and-braces: a deterministic random sample of full triples.
    uint64_t state = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < 1000000; ++i) {
        int x = static_cast<int>(splitmix64_next(state) % n);
        int y = static_cast<int>(splitmix64_next(state) % n);
        int z = static_cast<int>(splitmix64_next(state) % n);
        if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)))
            throw NotAGroup("associativity fails at (" + std::to_string(x) +
                            ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
    }
}

} // namespace

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw NotAGroup("row " + std::to_string(i) + " has " +
                            std::to_string(table[i].size()) + " entries, expected " +
                            std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw NotAGroup("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") = " + std::to_string(table[i][j]) + " out of range");
    }
    // Latin square: every row and column is a permutation.
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j]])
                throw NotAGroup("row " + std::to_string(i) + " repeats value " +
                                std::to_string(table[i][j]));
            seen_row[table[i][j]] = 1;
            if (seen_col[table[j][i]])
                throw NotAGroup("column " + std::to_string(i) + " repeats value " +
                                std::to_string(table[j][i]));
            seen_col[table[j][i]] = 1;
        }
    }
    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) identity = e;
    }
    if (identity < 0) throw NotAGroup("no two-sided identity element");

    FiniteGroup G;
    G.order = n;
    G.identity = identity;
    G.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G.table[static_cast<size_t>(i) * n + j] = table[i][j];

    // Two-sided inverses (the Latin property makes the right inverse unique).
    G.inv.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int y = -1;
        for (int c = 0; c < n; ++c)
            if (table[x][c] == identity) { y = c; break; }
        if (y < 0 || table[y][x] != identity)
            throw NotAGroup("element " + std::to_string(x) + " has no two-sided inverse");
        G.inv[x] = y;
    }

    check_associativity(G);
    return G;
}

FiniteGroup from_generators(const std::vector<std::vector<int>>& perms, int cap) {
    if (perms.empty()) throw BadParameter("from_generators: no permutations given");
    const size_t deg = perms[0].size();
    if (deg == 0) throw BadParameter("from_generators: empty permutation");
    for (const auto& p : perms) {
        if (p.size() != deg)
            throw BadParameter("from_generators: permutations act on different sets");
        std::vector<char> seen(deg, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(deg) || seen[v])
                throw BadParameter("from_generators: not a permutation");
            seen[v] = 1;
        }
    }

    // Closure under composition, breadth-first from the identity.
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index_of;
    auto intern = [&](const std::vector<int>& p) {
        auto it = index_of.find(p);
        if (it != index_of.end()) return it->second;
        if (static_cast<int>(elems.size()) >= cap)
            throw CapExceeded("from_generators: closure exceeds cap " + std::to_string(cap));
        int idx = static_cast<int>(elems.size());
        elems.push_back(p);
        index_of.emplace(p, idx);
        return idx;
    };
    intern(id);
    std::vector<int> gen_indices;
    for (const auto& p : perms) gen_indices.push_back(intern(p));

    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = q[p[i]];
        return r;
    };

    for (size_t head = 0; head < elems.size(); ++head) {
        std::vector<int> cur = elems[head];   // copy: elems may reallocate
        for (const auto& p : perms) intern(compose(cur, p));
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index_of.find(compose(elems[i], elems[j]));
            // Closure guarantees presence.
            table[i][j] = it->second;
        }
    FiniteGroup G = from_cayley_table(table);
    G.generators = gen_indices;
    return G;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(),
                         other.members.begin(), other.members.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
    return Subgroup{&G, {G.identity}};
}

Subgroup whole_group(const FiniteGroup& G) {
    Subgroup S{&G, std::vector<int>(G.order)};
    std::iota(S.members.begin(), S.members.end(), 0);
    return S;
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order, 0);
    in[G.identity] = 1;
    std::vector<int> frontier{G.identity};
    while (!frontier.empty()) {
        std::vector<int> fresh;
        for (int x : frontier)
            for (int g : gens) {
                int y = G.mul(x, g);
                if (!in[y]) { in[y] = 1; fresh.push_back(y); }
            }
        frontier = std::move(fresh);
    }
    Subgroup S{&G, {}};
    for (int x = 0; x < G.order; ++x)
        if (in[x]) S.members.push_back(x);
    return S;
}

std::vector<int> small_generating_set(const FiniteGroup& G, const Subgroup& H) {
    std::vector<int> gens;
    Subgroup closure = trivial_subgroup(G);
    while (closure.order() < H.order()) {
        int next = -1;
        for (int x : H.members)
            if (!closure.contains(x)) { next = x; break; }
        gens.push_back(next);
        closure = subgroup_generated(G, gens);
    }
    return gens;
}

std::vector<int> generating_set(const FiniteGroup& G) {
    if (!G.generators.empty()) return G.generators;
    return small_generating_set(G, whole_group(G));
}

int element_order(const FiniteGroup& G, int x) {
    int ord = 1;
    int cur = x;
    while (cur != G.identity) {
        cur = G.mul(cur, x);
        ++ord;
    }
    return ord;
}

int exponent(const FiniteGroup& G) {
    long long l = 1;
    for (int x = 0; x < G.order; ++x)
        l = std::lcm(l, static_cast<long long>(element_order(G, x)));
    return static_cast<int>(l);
}

Subgroup center(const FiniteGroup& G) {
    Subgroup Z{&G, {}};
    for (int x = 0; x < G.order; ++x) {
        bool central = true;
        for (int y = 0; y < G.order && central; ++y)
            if (G.mul(x, y) != G.mul(y, x)) central = false;
        if (central) Z.members.push_back(x);
    }
    return Z;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& K) {
    Subgroup N{&G, {}};
    for (int t = 0; t < G.order; ++t) {
        bool fixes = true;
        for (int k : K.members)
            if (!K.contains(G.conj(k, t))) { fixes = false; break; }
        if (fixes) N.members.push_back(t);
    }
    return N;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& K) {
    Subgroup C{&G, {}};
    for (int t = 0; t < G.order; ++t) {
        bool commutes = true;
        for (int k : K.members)
            if (G.mul(t, k) != G.mul(k, t)) { commutes = false; break; }
        if (commutes) C.members.push_back(t);
    }
    return C;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& K, int t) {
    Subgroup R{&G, {}};
    R.members.reserve(K.members.size());
    for (int k : K.members) R.members.push_back(G.conj(k, t));
    std::sort(R.members.begin(), R.members.end());
    return R;
}

Subgroup core_of(const FiniteGroup& G, const Subgroup& K) {
    // Intersect with generator-conjugates until stable.  A fixed point C has
    // C^g = C for every generator (conjugation preserves order, so C inside
    // C^g forces equality), hence C is normal; and every normal subgroup of G
    // inside K survives each intersection, so the fixed point is the largest
    // one: the core.  Subgroup chains are short, so few rounds happen.
    Subgroup C = K;
    std::vector<int> gens = generating_set(G);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g : gens) {
            Subgroup conj = conjugate_subgroup(G, C, g);
            if (conj == C) continue;
            C = intersect(C, conj);
            changed = true;
        }
    }
    return C;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    if (A.parent != B.parent) throw ParentMismatch("intersect: different parent groups");
    Subgroup R{A.parent, {}};
    std::set_intersection(A.members.begin(), A.members.end(),
                          B.members.begin(), B.members.end(),
                          std::back_inserter(R.members));
    return R;
}

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<int> gens = small_generating_set(G, A);
    std::vector<int> gens_b = small_generating_set(G, B);
    gens.insert(gens.end(), gens_b.begin(), gens_b.end());
    return subgroup_generated(G, gens);
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<int> comms;
    std::vector<char> seen(G.order, 0);
    for (int a : A.members)
        for (int b : B.members) {
            int c = G.mul(G.mul(G.inv[a], G.inv[b]), G.mul(a, b));
            if (!seen[c]) { seen[c] = 1; comms.push_back(c); }
        }
    return subgroup_generated(G, comms);
}

bool is_normal(const FiniteGroup& G, const Subgroup& K) {
    for (int t : generating_set(G))
        for (int k : K.members)
            if (!K.contains(G.conj(k, t))) return false;
    return true;
}

bool is_normal_in(const FiniteGroup& G, const Subgroup& K, const Subgroup& H) {
    for (int t : H.members)
        for (int k : K.members)
            if (!K.contains(G.conj(k, t))) return false;
    return true;
}

std::optional<int> cyclic_generator(const FiniteGroup& G, const Subgroup& S) {
    for (int x : S.members)
        if (element_order(G, x) == S.order()) return x;
    return std::nullopt;
}

std::optional<int> cyclic_generator(const FiniteGroup& G) {
    return cyclic_generator(G, whole_group(G));
}

namespace {

// Join-closure of a seed family of subgroups: keeps joining pairs until no
// new subgroup appears.  Small generating sets are carried along so each
// join is one closure over a handful of generators.
std::vector<Subgroup> join_closure(const FiniteGroup& G, std::vector<Subgroup> seeds) {
    struct Entry {
        Subgroup sub;
        std::vector<int> gens;
    };
    std::vector<Entry> entries;
    std::set<std::vector<int>> seen;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.members).second)
            entries.push_back({s, small_generating_set(G, s)});
    };
    add(trivial_subgroup(G));
    for (auto& s : seeds) add(std::move(s));
    for (size_t j = 0; j < entries.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            if (entries[i].sub.contains_all(entries[j].sub) ||
                entries[j].sub.contains_all(entries[i].sub))
                continue;
            std::vector<int> gens = entries[i].gens;
            gens.insert(gens.end(), entries[j].gens.begin(), entries[j].gens.end());
            add(subgroup_generated(G, gens));
        }
    std::vector<Subgroup> result;
    result.reserve(entries.size());
    for (auto& e : entries) result.push_back(std::move(e.sub));
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int cap) {
    if (G.order > cap)
        throw CapExceeded("all_subgroups: group order " + std::to_string(G.order) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<Subgroup> cyclics;
    std::set<std::vector<int>> seen;
    for (int x = 0; x < G.order; ++x) {
        Subgroup c = subgroup_generated(G, {x});
        if (seen.insert(c.members).second) cyclics.push_back(std::move(c));
    }
    return join_closure(G, std::move(cyclics));
}

std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& G, int cap) {
    if (G.order > cap)
        throw CapExceeded("all_normal_subgroups: group order " + std::to_string(G.order) +
                          " exceeds cap " + std::to_string(cap));
    if (G.order <= 256) {
        std::vector<Subgroup> result;
        for (auto& s : all_subgroups(G, cap))
            if (is_normal(G, s)) result.push_back(std::move(s));
        return result;   // already sorted
    }
    // Every normal subgroup is the join of the normal closures of its
    // members, so the join-closure of all single-element normal closures
    // contains exactly the normal subgroups (joins of normals are normal).
    std::vector<Subgroup> closures;
    std::set<std::vector<int>> seen;
    for (int x = 0; x < G.order; ++x) {
        std::vector<int> cls;
        std::vector<char> mark(G.order, 0);
        for (int t = 0; t < G.order; ++t) {
            int y = G.conj(x, t);
            if (!mark[y]) { mark[y] = 1; cls.push_back(y); }
        }
        Subgroup nc = subgroup_generated(G, cls);
        if (seen.insert(nc.members).second) closures.push_back(std::move(nc));
    }
    return join_closure(G, std::move(closures));
}

QuotientMap quotient(const FiniteGroup& G, const Subgroup& N) {
    if (N.parent != &G) throw ParentMismatch("quotient: subgroup of a different group");
    if (!is_normal(G, N))
        throw NotNormal("quotient: subgroup is not normal");
    const int n = G.order;
    // Least member of each coset xN.
    std::vector<int> rep_of(n, -1);
    for (int x = 0; x < n; ++x) {
        if (rep_of[x] >= 0) continue;
        int least = x;
        std::vector<int> coset;
        coset.reserve(N.members.size());
        for (int m : N.members) {
            int y = G.mul(x, m);
            coset.push_back(y);
            least = std::min(least, y);
        }
        for (int y : coset) rep_of[y] = least;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (rep_of[x] == x) reps.push_back(x);
    std::vector<int> index_of_rep(n, -1);
    for (size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = static_cast<int>(i);

    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[i][j] = index_of_rep[rep_of[G.mul(reps[i], reps[j])]];

    QuotientMap Q;
    Q.source = &G;
    Q.kernel = N;
    Q.group = from_cayley_table(table);
    Q.group.labels.resize(q);
    for (int i = 0; i < q; ++i) Q.group.labels[i] = G.label(reps[i]);
    Q.projection.resize(n);
    for (int x = 0; x < n; ++x) Q.projection[x] = index_of_rep[rep_of[x]];
    Q.section = reps;
    // Images of a generating set of the source generate the quotient; storing
    // them keeps generating_set() cheap on derived groups.
    std::vector<int> qgens;
    for (int g : generating_set(G)) {
        int img = Q.projection[g];
        if (img != Q.group.identity &&
            std::find(qgens.begin(), qgens.end(), img) == qgens.end()) {
            qgens.push_back(img);
        }
    }
    Q.group.generators = std::move(qgens);
    return Q;
}

SubgroupGroup group_of_subgroup(const FiniteGroup& G, const Subgroup& H) {
    const int m = H.order();
    std::unordered_map<int, int> from_parent;
    from_parent.reserve(m * 2);
    for (int i = 0; i < m; ++i) from_parent.emplace(H.members[i], i);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int prod = G.mul(H.members[i], H.members[j]);
            auto it = from_parent.find(prod);
            if (it == from_parent.end())
                throw NotAGroup("member list is not closed under multiplication");
            table[i][j] = it->second;
        }
    SubgroupGroup S;
    S.group = from_cayley_table(table);
    S.group.labels.resize(m);
    for (int i = 0; i < m; ++i) S.group.labels[i] = G.label(H.members[i]);
    for (int g : small_generating_set(G, H)) S.group.generators.push_back(from_parent.at(g));
    S.to_parent = H.members;
    S.from_parent = std::move(from_parent);
    return S;
}

} // namespace zcu

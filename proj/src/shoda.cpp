#include "zcu/shoda.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zcu {

namespace {

// Least k >= 1 with x^k in K.
int coset_order(const FiniteGroup& G, int x, const Subgroup& K) {
    int y = x, k = 1;
    while (!K.contains(y)) {
        y = G.mul(y, x);
        ++k;
    }
    return k;
}

// Least member of H whose coset generates H/K, or -1 when H/K is not cyclic.
// Members are scanned in ascending order, so the choice is deterministic.
int cyclic_coset_generator(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    const int q = H.order() / K.order();
    for (int x : H.members) {
        if (coset_order(G, x, K) == q) return x;
    }
    return -1;
}

int commutator(const FiniteGroup& G, int a, int b) {
    return G.mul(G.inv[a], G.mul(G.inv[b], G.mul(a, b)));
}

// Size of the preimage in N of the centralizer of H/K in N/K: the elements
// n of N commuting with every generator of H modulo K.  H/K must be abelian
// and H contained in N; the centralizer equals H/K iff this count is |H|.
long long centralizer_preimage_size(const FiniteGroup& G, const Subgroup& N,
                                    const Subgroup& H, const Subgroup& K) {
    std::vector<int> hgens = small_generating_set(G, H);
    long long count = 0;
    for (int n : N.members) {
        bool central = true;
        for (int h : hgens) {
            if (!K.contains(commutator(G, n, h))) {
                central = false;
                break;
            }
        }
        if (central) ++count;
    }
    return count;
}

// The image of a parent subgroup under a quotient projection.
Subgroup project_subgroup(const QuotientMap& qm, const Subgroup& S) {
    std::vector<int> members;
    for (int x : S.members) members.push_back(qm.projection[x]);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Subgroup{&qm.group, std::move(members)};
}

// The preimage in the source group of a subgroup of the quotient.
Subgroup lift_subgroup(const QuotientMap& qm, const Subgroup& S) {
    Subgroup up{qm.source, {}};
    for (int x = 0; x < qm.source->order; ++x) {
        if (S.contains(qm.projection[x])) up.members.push_back(x);
    }
    return up;
}

// Canonical-least member set in the G-conjugacy class of D, found by a
// breadth-first walk of the orbit under the generators.
Subgroup least_conjugate(const FiniteGroup& G, const Subgroup& D) {
    std::vector<int> gens = generating_set(G);
    std::set<std::vector<int>> seen = {D.members};
    std::vector<Subgroup> orbit = {D};
    Subgroup best = D;
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (int s : gens) {
            Subgroup c = conjugate_subgroup(G, orbit[i], s);
            if (!seen.insert(c.members).second) continue;
            if (c < best) best = c;
            orbit.push_back(std::move(c));
        }
    }
    return best;
}

} // namespace

SspCheck is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (H.parent != &G || K.parent != &G) {
        throw ParentMismatch("subgroup pair does not belong to the given group");
    }
    // (i) K normal in H, H normal in the normalizer of K.
    if (!H.contains_all(K) || !is_normal_in(G, K, H)) {
        return {false, "(i) K is not normal in H"};
    }
    Subgroup N = normalizer(G, K);
    if (!N.contains_all(H) || !is_normal_in(G, H, N)) {
        return {false, "(i) H is not normal in the normalizer of K"};
    }
    // (ii) H/K cyclic and maximal abelian in N/K.
    if (cyclic_coset_generator(G, H, K) < 0) {
        return {false, "(ii) H/K is not cyclic"};
    }
    if (centralizer_preimage_size(G, N, H, K) != H.order()) {
        return {false, "(ii) H/K is not a maximal abelian subgroup of N/K"};
    }
    // (iii) the distinct conjugates of epsilon(H, K) are mutually orthogonal.
    std::vector<QGElement> conjugates = distinct_epsilon_conjugates(G, H, K);
    for (size_t i = 0; i < conjugates.size(); ++i) {
        for (size_t j = i + 1; j < conjugates.size(); ++j) {
            if (!are_orthogonal(conjugates[i], conjugates[j])) {
                return {false, "(iii) the distinct conjugates of epsilon are not mutually orthogonal"};
            }
        }
    }
    return {true, {}};
}

bool maximal_abelian_in(const FiniteGroup& Q, const Subgroup& C) {
    if (C.parent != &Q) throw ParentMismatch("subgroup does not belong to the given group");
    for (int x : C.members) {
        for (int y : C.members) {
            if (Q.mul(x, y) != Q.mul(y, x)) {
                throw NotAbelian("the candidate subgroup is not abelian");
            }
        }
    }
    return centralizer(Q, C) == C;
}

Subgroup a_N(const FiniteGroup& G, const Subgroup& N, int cap) {
    if (N.parent != &G) throw ParentMismatch("subgroup does not belong to the given group");
    if (!is_normal(G, N)) throw NotNormal("the chosen subgroup is not normal");
    QuotientMap qm = quotient(G, N);
    std::vector<Subgroup> normals = all_normal_subgroups(qm.group, cap);

    // An abelian subgroup is recognized by a pairwise-commuting generating
    // set, which is much cheaper than scanning all member pairs.
    auto is_abelian_subgroup = [&](const Subgroup& S) {
        std::vector<int> gens = small_generating_set(qm.group, S);
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i + 1; j < gens.size(); ++j) {
                if (qm.group.mul(gens[i], gens[j]) != qm.group.mul(gens[j], gens[i])) return false;
            }
        }
        return true;
    };

    int best_order = 0;
    for (const Subgroup& S : normals) {
        if (S.order() > best_order && is_abelian_subgroup(S)) best_order = S.order();
    }
    // normals is sorted canonically, so the first hit is the canonical choice.
    for (const Subgroup& S : normals) {
        if (S.order() == best_order && is_abelian_subgroup(S)) {
            Subgroup lifted = lift_subgroup(qm, S);
            return lifted;
        }
    }
    throw BadParameter("no abelian normal subgroup found in the quotient"); // unreachable
}

std::vector<Subgroup> d_N(const FiniteGroup& G, const Subgroup& N, const Subgroup& A, int cap) {
    if (N.parent != &G || A.parent != &G) {
        throw ParentMismatch("subgroup does not belong to the given group");
    }
    if (!is_normal(G, N)) throw NotNormal("the chosen subgroup is not normal");
    if (!A.contains_all(N)) throw BadParameter("the abelian lift must contain the normal subgroup");
    if (!is_normal(G, A)) throw NotNormal("the abelian lift is not normal");

    QuotientMap qm = quotient(G, N);
    Subgroup a_bar = project_subgroup(qm, A);

    // A/N must be abelian for the candidate scan below.
    {
        std::vector<int> gens = small_generating_set(qm.group, a_bar);
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i + 1; j < gens.size(); ++j) {
                if (qm.group.mul(gens[i], gens[j]) != qm.group.mul(gens[j], gens[i])) {
                    throw NotAbelian("the lift is not abelian over the normal subgroup");
                }
            }
        }
    }

    // Subgroups of A/N, i.e. the D with N <= D <= A, enumerated locally.
    SubgroupGroup abg = group_of_subgroup(qm.group, a_bar);
    std::vector<Subgroup> local_subs = all_subgroups(abg.group, cap);

    std::vector<Subgroup> result;
    for (const Subgroup& S : local_subs) {
        Subgroup d_bar{&qm.group, {}};
        for (int i : S.members) d_bar.members.push_back(abg.to_parent[i]);
        std::sort(d_bar.members.begin(), d_bar.members.end());

        // core_G(D) = N exactly when the core of D/N in G/N is trivial.
        if (core_of(qm.group, d_bar).order() != 1) continue;

        // A/D cyclic: some coset of D in A has order equal to the index.
        const int index = a_bar.order() / d_bar.order();
        long long lcm_orders = 1;
        bool cyclic = false;
        for (int x : a_bar.members) {
            lcm_orders = std::lcm(lcm_orders, static_cast<long long>(coset_order(qm.group, x, d_bar)));
            if (lcm_orders == index) {
                cyclic = true;
                break;
            }
        }
        if (!cyclic) continue;

        // A/D maximal abelian in N_G(D)/D, tested by counting the
        // centralizer preimage inside the normalizer.
        Subgroup nb = normalizer(qm.group, d_bar);
        if (centralizer_preimage_size(qm.group, nb, a_bar, d_bar) != a_bar.order()) continue;

        result.push_back(lift_subgroup(qm, d_bar));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Subgroup> t_N(const FiniteGroup& G, const std::vector<Subgroup>& ds) {
    std::vector<Subgroup> reps;
    std::set<std::vector<int>> seen;
    for (const Subgroup& D : ds) {
        if (D.parent != &G) throw ParentMismatch("subgroup does not belong to the given group");
        Subgroup rep = least_conjugate(G, D);
        if (seen.insert(rep.members).second) reps.push_back(std::move(rep));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

ShodaPairRecord make_ssp_record(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (H.parent != &G || K.parent != &G) {
        throw ParentMismatch("subgroup pair does not belong to the given group");
    }
    if (!H.contains_all(K) || !is_normal_in(G, K, H)) {
        throw NotNormal("the second subgroup is not normal in the first");
    }
    ShodaPairRecord rec;
    rec.H = H;
    rec.K = K;
    rec.q = H.order() / K.order();
    rec.q_factorization = factorize(rec.q);
    rec.g = cyclic_coset_generator(G, H, K);
    if (rec.g < 0) throw BadParameter("H/K is not cyclic");
    for (int j = 0; j < rec.q; ++j) {
        int gj = G.power(rec.g, j);
        for (int k : K.members) rec.coset_exponent.emplace(G.mul(gj, k), j);
    }
    rec.N = normalizer(G, K);
    rec.m = G.order / rec.N.order();
    rec.epsilon = epsilon(H, K);
    rec.e = e_idempotent(G, H, K);
    return rec;
}

SspFamily compute_ssp_family(const FiniteGroup& G, int cap) {
    SspFamily fam;
    fam.group = &G;

    // The (G, G) pair arises from N = G and always comes first.
    fam.records.push_back(make_ssp_record(G, whole_group(G), whole_group(G)));
    fam.certificate_sum = 1;  // [G:G] * phi([G:G])

    for (const Subgroup& N : all_normal_subgroups(G, cap)) {
        if (N.order() == G.order) continue;  // handled above
        Subgroup A = a_N(G, N, cap);
        std::vector<Subgroup> ds = d_N(G, N, A, cap);
        for (const Subgroup& D : ds) {
            fam.certificate_sum += static_cast<long long>(G.order / A.order()) *
                                   euler_phi(A.order() / D.order());
        }
        for (const Subgroup& D : t_N(G, ds)) {
            fam.records.push_back(make_ssp_record(G, A, D));
        }
    }
    fam.normally_monomial = (fam.certificate_sum == G.order);

    // Enforce pairwise-distinct central idempotents.  A run whose
    // certificate holds never drops anything here; a drop would surface as a
    // certificate or idempotent-sum failure instead of silent duplication.
    std::vector<ShodaPairRecord> unique_records;
    for (ShodaPairRecord& rec : fam.records) {
        bool duplicate = false;
        for (const ShodaPairRecord& kept : unique_records) {
            if (kept.e == rec.e) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) unique_records.push_back(std::move(rec));
    }
    fam.records = std::move(unique_records);

    QGElement sum = QGElement::zero(G);
    for (const ShodaPairRecord& rec : fam.records) sum = add(sum, rec.e);
    fam.complete = fam.normally_monomial && (sum == QGElement::one(G));
    return fam;
}

bool are_equivalent(const FiniteGroup& G, const Subgroup& H1, const Subgroup& K1,
                    const Subgroup& H2, const Subgroup& K2) {
    return e_idempotent(G, H1, K1) == e_idempotent(G, H2, K2);
}

} // namespace zcu

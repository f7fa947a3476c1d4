#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "zcu/cyclotomic.hpp"
#include "zcu/group.hpp"
#include "zcu/qg.hpp"

namespace zcu {

// A strong Shoda pair (H, K) of the parent group, together with everything
// later stages need: the normalizer N of K, the cyclic-quotient data for
// H/K, and the two idempotents.  All subgroups and algebra elements point at
// the parent group, which must outlive the record.
struct ShodaPairRecord {
    Subgroup H;
    Subgroup K;
    Subgroup N;                                   // normalizer of K in the parent
    int q = 1;                                    // [H : K]
    std::vector<PrimePower> q_factorization;
    int g = 0;                                    // the coset g*K generates H/K
    std::unordered_map<int, int> coset_exponent;  // member x of H -> j with x in g^j K
    QGElement epsilon;                            // epsilon(H, K)
    QGElement e;                                  // sum of the distinct conjugates
    int m = 1;                                    // [G : N]
};

// The family of strong Shoda pairs produced by the normal-subgroup sweep.
// records[0] is always the (G, G) pair; the rest follow the canonical order
// of the normal subgroups they arose from.  `normally_monomial` reports the
// order-sum certificate; `complete` additionally requires the idempotents to
// sum to 1.  A group that fails the certificate still gets its partial
// family back - that outcome is an answer, not an error.
struct SspFamily {
    const FiniteGroup* group = nullptr;
    std::vector<ShodaPairRecord> records;
    bool complete = false;
    bool normally_monomial = false;
    long long certificate_sum = 0;  // sum of [G:A_N] * phi([A_N:D]) over all N and D
};

// Outcome of the three-condition strong-Shoda-pair test.  When the test
// fails, `witness` names the first condition that broke.
struct SspCheck {
    bool ok = false;
    std::string witness;
    explicit operator bool() const { return ok; }
};

// Checks, in order: (i) K normal in H and H normal in the normalizer N of K;
// (ii) H/K cyclic and maximal abelian in N/K; (iii) the distinct conjugates
// of epsilon(H, K) mutually orthogonal.
SspCheck is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// True iff no abelian subgroup of Q properly contains C; equivalently the
// centralizer of C in Q is C itself.  Throws NotAbelian when C is not
// abelian.
bool maximal_abelian_in(const FiniteGroup& Q, const Subgroup& C);

// The lift of an abelian normal subgroup of G/N of maximal order, taking the
// first in the canonical subgroup order among the maximal-order candidates.
// `cap` bounds the normal-subgroup enumeration of the quotient.
Subgroup a_N(const FiniteGroup& G, const Subgroup& N, int cap = 1296);

// All D with N <= D <= A such that the core of D in G is N and A/D is cyclic
// and maximal abelian in N_G(D)/D, sorted canonically.
std::vector<Subgroup> d_N(const FiniteGroup& G, const Subgroup& N, const Subgroup& A,
                          int cap = 1296);

// One representative per G-conjugacy class: the canonical-least member set
// of each class, sorted.
std::vector<Subgroup> t_N(const FiniteGroup& G, const std::vector<Subgroup>& ds);

// Assembles the full record for a pair with H/K cyclic.  The generator g is
// the least member of H whose coset generates H/K.  Throws NotNormal when K
// is not normal in H and BadParameter when H/K is not cyclic.
ShodaPairRecord make_ssp_record(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// The normal-subgroup sweep: for every normal N, pairs (A_N, D) with D in
// the conjugacy-representative set of d_N.  Computes the order-sum
// certificate and the idempotent sum; enforces pairwise-distinct e by
// dropping exact duplicates (which a correct certificate run never has).
SspFamily compute_ssp_family(const FiniteGroup& G, int cap = 1296);

// Exact equality of the two central idempotents e(G, H, K).
bool are_equivalent(const FiniteGroup& G, const Subgroup& H1, const Subgroup& K1,
                    const Subgroup& H2, const Subgroup& K2);

} // namespace zcu

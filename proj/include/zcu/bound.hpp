#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "zcu/shoda.hpp"
#include "zcu/wedderburn.hpp"

namespace zcu {

// Real class number h+ of the maximal real subfield of the q-th cyclotomic
// field, for the prime powers q where the published value is 1.  Conductors
// outside the built-in table throw UnknownClassNumber unless `overrides`
// supplies a value (CLI flag --h-plus feeds this map).
long long h_plus(long long q, const std::map<long long, long long>* overrides = nullptr);

// 1 when inversion (-1 mod q) lies in the cyclic part <r> of the action
// image, else 2.  The image of N/H in U(Z/qZ) is either <r> or
// <r> x <-1> with -1 outside <r>; only the first form can contain -1.
int d_value(const ActionImage& img);

// Torsion order of the unit group of the ring of integers of the fixed
// field Q(zeta_q)^A when <A, -1> covers all of U(Z/qZ): 4 when p = 2, the
// image is cyclic <r> with r = 1 (mod 4) and q >= 4; 6 when p = 3 and the
// image is cyclic <r> with r = 1 (mod 3); 2 otherwise.  The same formula is
// evaluated (and reported) for every record, but it gives the torsion order
// only under that covering hypothesis, i.e. when |I| = 1.
int o_value(const ActionImage& img);

// Everything that enters one record's multiplicand in the index bound.
// For |I| = 1 the factor is o; h_plus_q and frak_o are left at 1 (unused).
// For |I| > 1 the factor is
//   h+_q * l * p^(n-1) * frak_o * (l^(d-1) [N:H])^(|I|-1),
// with l = lcm(2, p) and
//   frak_o = prod over 1 < k < q/2, (k, p) = 1 of o_q(k) * p^(n-1) * n_{H,K}.
struct BoundRow {
    int ssp_index = 0;  // position in the family (never 0: (G,G) contributes nothing)
    long long q = 1;    // [H:K] = p^n
    long long p = 1;
    int n = 0;
    int i_size = 1;     // |I|
    int d = 2;
    int o = 2;
    long long l = 2;
    long long index_n_in_h = 1;  // [N:H]
    long long n_hk = 1;
    long long h_plus_q = 1;
    mpz_class frak_o = 1;
    mpz_class factor = 1;
};

struct BoundReport {
    std::vector<BoundRow> rows;  // one per record beyond (G,G), in family order
    mpz_class total = 1;         // 2 * product of row factors
    std::string total_factored;  // e.g. "2^29 * 5^27"
};

// Upper bound on the index of the subgroup generated by the basis units
// inside the group of central units of Z[G]:
//   2 * prod over records with |I| = 1 of o
//     * prod over records with |I| > 1 of the composite factor above.
// Requires a complete family whose every index [H:K] is a prime power
// (PrimePowerRequired otherwise).  cap/jobs feed the n_{H,K} searches.
BoundReport index_bound(const SspFamily& fam, long long cap = 0, int jobs = 0,
                        const std::map<long long, long long>* h_plus_overrides = nullptr);

// True exactly when the central units of Z[G] are +-Z(G), i.e. the rank is
// zero (every |I| = 1).  Throws IncompleteFamily unless fam.complete.
bool trivial_central_units(const SspFamily& fam);

// The same bound computed by the closed formula for abelian p-groups, where
// the pairs are (G, K) for every subgroup K with cyclic quotient:
//   p = 2:   2 * prod_K 2^n h+_{2^n} prod_{1<k<2^(n-1), k odd} 2^n o_{2^n}(k) n_{G,K}
//   p odd:       prod_K 2 p^n h+_{p^n} prod_{1<k<p^n/2, (k,p)=1} 2 p^n o_{p^n}(k) n_{G,K}
// with q = [G:K] = p^n and empty products equal to 1.  Agrees with
// index_bound on the computed family.  Throws NotAbelian for nonabelian G,
// BadParameter when |G| is not a prime power.
mpz_class abelian_bound(const FiniteGroup& G, long long cap = 0, int jobs = 0,
                        const std::map<long long, long long>* h_plus_overrides = nullptr);

// "2^29 * 5^27" style factorization by trial division; "1" for one.  Any
// cofactor left after removing primes below 10^6 is printed as a final
// unfactored term.
std::string factored_string(const mpz_class& x);

} // namespace zcu

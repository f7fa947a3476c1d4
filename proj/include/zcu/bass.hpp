#pragma once

#include <vector>

#include <gmpxx.h>

#include "zcu/cyclotomic.hpp"
#include "zcu/qg.hpp"
#include "zcu/shoda.hpp"

namespace zcu {

// An element of the integral group ring Z[G]: same sparse representation as
// QGElement; functions returning ZGElement promise integer coefficients, and
// `is_integral` / `require_integral` are the checking interface.
using ZGElement = QGElement;

// True iff every coefficient is an integer.
bool is_integral(const QGElement& x);
// Returns x unchanged when integral; throws BadParameter naming the first
// offending coefficient otherwise.
ZGElement require_integral(const QGElement& x);
// Sum of all coefficients (the augmentation map Q[G] -> Q).
mpq_class augmentation(const QGElement& x);
// Exact inverse of a unit of the group algebra.  Elements of the form
// (1 - hat(K)) + w*hat(K) are inverted inside the [H:K]-dimensional coset
// algebra; anything else is solved as a linear system over the subgroup
// generated by the support.  Throws BadParameter when no inverse exists.
QGElement inverse_unit(const QGElement& u);

// Same, but uses the record's coset grading directly: for a unit supported
// on H of the form (1 - hat(K)) + w*hat(K) this solves a [H:K]-dimensional
// circulant system instead of one sized by the support subgroup.  Falls back
// to the generic overload when the element does not have that shape.
QGElement inverse_unit(const ShodaPairRecord& rec, const QGElement& u);

// Bass cyclic unit
//   u_{k,m}(g) = (1+g+...+g^{k-1})^m + ((1-k^m)/n)(1+g+...+g^{n-1}),
// n = |g|.  Requires k, m >= 1, (k, n) = 1 and k^m == 1 (mod n); throws
// BadParameter otherwise.  Always integral, with augmentation 1.
ZGElement bass_unit(const FiniteGroup& G, int g, long long k, long long m);

// 1 - hat(M) + u_{k,m}(g)*hat(M) for a normal subgroup M: the base of the
// generalized Bass unit.  A unit of Z[G](1-hat(M)) + Z[G]hat(M); its
// coefficients have denominators dividing |M|.  Throws NotNormal when M is
// not normal in G, BadParameter as bass_unit.
QGElement gbu_base(const FiniteGroup& G, const Subgroup& M, int g, long long k, long long m);

// Minimal e >= 1 such that gbu_base(G, M, g, k, o_{|g|}(k))^e is integral
// for every k with 1 < k < |g| and (k, |g|) = 1; returns 1 when g lies in M
// or |g| <= 2 (no admissible k).  cap = 0 means 4*|G|.  Throws CapExceeded
// naming the offending (g, k) when the search passes cap.
long long n_gM(const FiniteGroup& G, const Subgroup& M, int g, long long cap = 0);

// Minimal e >= 1 working simultaneously for every g in G \ M: 1 when M is
// trivial (identity subgroup or all of G) or every such g has order <= 2.
// jobs = 1 runs the plain serial loop over the deduplicated (coset, order)
// classes; any other value uses the OpenMP kernel (0 = library default
// thread count).  Both paths produce identical results.
long long n_GM(const FiniteGroup& G, const Subgroup& M, long long cap = 0, int jobs = 0);

// n_{H,K} of a record: n_GM computed inside H (H realized as a standalone
// group, K mapped along).  cap = 0 means 4*|H|.
long long n_for_record(const ShodaPairRecord& rec, long long cap = 0, int jobs = 0);

// The recursive product c_j^s(H, K, k, r) of generalized Bass units of Z[H]
// attached to a record with [H:K] = p^n (PrimePowerRequired otherwise, with
// q = 1 meaning n = 0):
//   c_s^s = 1,
//   c_j^s = (prod_{t=0}^{p^j - 1} gbu_base(H, K, g^{r p^{n-s}} g^{t p^{n-j}},
//                                          k, o_{p^n}(k) * n_{H,K}))^{p^{s-j-1}}
//           * prod_{l=j+1}^{s-1} (c_l^s)^{-1}
//           * prod_{l=0}^{j-1} (c_l^{s+l-j})^{-1}      for 0 <= j < s,
// computed in Q[parent] with support inside H.  Each gbu_base factor depends
// on its base element only through the K-coset, and the cosets of K in
// L_j = <g^{p^{n-j}}, K> are exactly g^{t p^{n-j}} K, so the leading product
// runs over that transversal.  Memoized on (j, s, k, r mod p^n) within one
// call tree.  Requires 0 <= j <= s <= n and (k, p) = 1; throws BadParameter
// otherwise.  The result is checked integral before it is returned.
ZGElement c_unit(const ShodaPairRecord& rec, int j, int s, long long k, long long r);

// B(H, K): for each k in i_set(rec) other than 1, the product over the
// action residues x of c_0^n(H, K, k, x).  |i_set| - 1 integral units of
// Z[H], in ascending-k order.
std::vector<ZGElement> b_set(const ShodaPairRecord& rec);

// {prod_{t in T} u^t : u in b_set(rec)} for T the canonical right
// transversal of N in G (least representative per coset N*t, ascending).
std::vector<ZGElement> script_b_set(const ShodaPairRecord& rec);

// Union of b_set over the records of a complete family; the (G, G) record
// contributes nothing since its i_set is {1}.  Size equals
// rank_central_units(fam).  Throws IncompleteFamily.
std::vector<ZGElement> virtual_basis(const SspFamily& fam);

// eta_k evaluated at zeta_n^j: 1 when n = 1, else sum_{i=0}^{k-1} zeta_n^{ij}.
// Requires k >= 1.
CyclotomicNumber cyclotomic_eta(long long k, long long n, long long j);

// The conductor-q coordinate of a central unit of Q(1-e) + Q[N]e, reached by
// re-grading u along the cosets g^j K and evaluating at zeta_q:
//   u |-> sum_j (sum of coefficients of u on g^j K) * zeta_q^j.
// Requires support(u) inside H and invariance of u*epsilon under
// N-conjugation; throws NotCentral otherwise.
CyclotomicNumber project_central_unit(const ShodaPairRecord& rec, const QGElement& u);

} // namespace zcu

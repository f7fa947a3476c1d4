#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zcu/cyclotomic.hpp"
#include "zcu/shoda.hpp"

namespace zcu {

// How the acting group N/H sits inside U(Z/qZ).
enum class ActionStructure {
    trivial_action,           // image {1}
    cyclic,                   // image <r>
    cyclic_times_minus_one,   // image <r> x <-1> with -1 not in <r>
};

// The image of N/H in U(Z/qZ), q = [H:K], acting on H/K = <gK> by
// conjugation: the coset nH maps to the residue j with n^{-1} g n K = g^j K.
// The map is faithful for a valid strong Shoda pair, so residues biject with
// the cosets of H in N.
struct ActionImage {
    int q = 1;
    std::vector<int> gens;      // residues generating the image
    std::vector<int> gen_reps;  // parallel coset representatives realizing them
    int order = 1;              // [N:H] = size of the image
    std::vector<int> residues;  // the full image subgroup, ascending
    ActionStructure structure = ActionStructure::trivial_action;
    int structure_r = 0;        // canonical generator r for the tag; 0 if trivial
};

// The fixed field Q(zeta_q)^A of a subgroup A of U(Z/qZ).  `recognized`
// holds q' exactly when A is the kernel of U(Z/qZ) -> U(Z/q'Z), i.e. the
// fixed field literally equals Q(zeta_{q'}); otherwise the field is reported
// abstractly by (q, A, degree) and never guessed.
struct FixedFieldDescriptor {
    int q = 1;
    std::vector<int> subgroup;      // A, ascending
    int degree = 1;                 // [Q(zeta_q)^A : Q] = phi(q) / |A|
    std::optional<int> recognized;  // q' with Q(zeta_q)^A = Q(zeta_{q'})
};

// One simple component of Q[G], described from a strong Shoda pair record:
// an (outer degree) x (outer degree) matrix ring over the crossed product of
// Q(zeta_q) by N/H twisted by `cocycle`.  When the twisting is shown to be
// trivial, `simplified` gives the equivalent matrix ring over the fixed
// field: (total matrix degree, center).
struct ComponentDescriptor {
    int ssp_index = 0;   // position of the record in its family (set by decomposition)
    int outer_degree = 1;  // [G:N]
    int q = 1;
    ActionImage action;
    // (residue of x, residue of y) -> t with n_x n_y = n_{xy} g^t k, k in K.
    std::map<std::pair<int, int>, int> cocycle;
    std::optional<std::pair<int, FixedFieldDescriptor>> simplified;
};

// The conjugation action of N/H on H/K.  Throws ActionNotFaithful when the
// record does not define a faithful action (a broken record).
ActionImage action_image(const ShodaPairRecord& rec);

// The fixed field of the image subgroup acting on Q(zeta_q).
FixedFieldDescriptor fixed_field(const ActionImage& img);

// Ordered residue representatives: the smallest k in [1, q/2], coprime to q,
// one per coset of <image, -1> in U(Z/qZ); always contains 1; {1} for q <= 2.
std::vector<int> i_set(const ShodaPairRecord& rec);

// Rank of the group of central units of Z[G]: sum of (|I_i| - 1) over the
// family.  Throws IncompleteFamily unless fam.complete.
long long rank_central_units(const SspFamily& fam);

// The simple component attached to one record, with the cocycle computed
// from canonical coset representatives (identity for the H-coset, least
// member otherwise) and a trivialization attempt by preimage search.
ComponentDescriptor component(const ShodaPairRecord& rec);

// One component per record, in family order.  Throws IncompleteFamily
// unless fam.complete, and DimensionMismatch if the component dimensions do
// not add up to |G| exactly.
std::vector<ComponentDescriptor> decomposition(const SspFamily& fam);

// Q-dimension of a component: (outer degree)^2 * [N:H] * phi(q), which for a
// simplified component equals (total degree)^2 * [center : Q].
long long component_dimension(const ComponentDescriptor& comp);

// Human-readable decomposition, components sorted by dimension then name and
// grouped with exponents, e.g. "Q + Q(z3)^4 + M3(Q(z3)) + M3(Q(z9))".
std::string decomposition_string(const std::vector<ComponentDescriptor>& comps);

} // namespace zcu

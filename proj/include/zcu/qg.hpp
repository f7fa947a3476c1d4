#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "zcu/group.hpp"

namespace zcu {

// An element of the rational group algebra Q[G], stored sparsely: the map
// holds exactly the nonzero coefficients, keyed by element index, and every
// mpq_class is kept in lowest terms.  Arithmetic is exact; equality of two
// elements is coefficient-map equality.  Elements are immutable values; like
// Subgroup, they point at their parent group, which must stay alive at a
// stable address.
class QGElement {
  public:
    QGElement() = default;
    explicit QGElement(const FiniteGroup* parent) : parent_(parent) {}
    // Strips zero coefficients so the representation is canonical.
    QGElement(const FiniteGroup* parent, std::map<int, mpq_class> coeffs);

    const FiniteGroup* parent() const { return parent_; }
    const std::map<int, mpq_class>& coeffs() const { return coeffs_; }
    // Coefficient of the given element (0 when absent).
    mpq_class coeff(int element) const;
    int support_size() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const { return coeffs_.empty(); }

    static QGElement zero(const FiniteGroup& G);
    // The multiplicative identity (coefficient 1 on the group identity).
    static QGElement one(const FiniteGroup& G);
    // c * x for a single group element x.
    static QGElement basis(const FiniteGroup& G, int element, const mpq_class& c = 1);

    friend bool operator==(const QGElement& a, const QGElement& b) {
        return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QGElement& a, const QGElement& b) { return !(a == b); }

  private:
    const FiniteGroup* parent_ = nullptr;
    std::map<int, mpq_class> coeffs_;
};

// All binary operations throw ParentMismatch when the operands live in
// different group algebras.
QGElement add(const QGElement& a, const QGElement& b);
QGElement subtract(const QGElement& a, const QGElement& b);
QGElement scale(const mpq_class& c, const QGElement& a);
QGElement multiply(const QGElement& a, const QGElement& b);
// t^-1 * a * t, the algebra automorphism induced by conjugation.
QGElement conjugate(const QGElement& a, int t);
// a^e for e >= 0, by repeated squaring.  Throws BadParameter for e < 0.
QGElement power(const QGElement& a, long long e);

// The averaged subgroup sum (1/|S|) * sum of the members of S, an idempotent.
QGElement hat(const Subgroup& S);

// All subgroups M with K < M normal in H and M/K minimal among the nontrivial
// normal subgroups of H/K, sorted canonically.  Throws NotNormal when K is
// not normal in H (or not contained in it).
std::vector<Subgroup> minimal_normals_above(const Subgroup& H, const Subgroup& K);

// hat(H) when H == K, otherwise the product of (hat(K) - hat(M)) over the
// minimal normals M/K of H/K.  Always an idempotent supported inside H.
// Throws NotNormal like minimal_normals_above.
QGElement epsilon(const Subgroup& H, const Subgroup& K);

// The distinct G-conjugates of epsilon(H, K): the conjugate by t depends only
// on the pair (H^t, K^t), so the pair orbit is walked generator-by-generator
// and the resulting elements are de-duplicated by exact equality.
std::vector<QGElement> distinct_epsilon_conjugates(const FiniteGroup& G, const Subgroup& H,
                                                   const Subgroup& K);

// The sum of the distinct G-conjugates of epsilon(H, K).
QGElement e_idempotent(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// x * x == x.
bool is_idempotent(const QGElement& x);
// x * y == 0 == y * x.
bool are_orthogonal(const QGElement& x, const QGElement& y);
// x commutes with every group element; checked against a generating set,
// which suffices because the generators span the algebra multiplicatively.
bool is_central(const QGElement& x);

} // namespace zcu

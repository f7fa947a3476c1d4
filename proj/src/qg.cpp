#include "zcu/qg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace zcu {

namespace {

void require_same_parent(const QGElement& a, const QGElement& b) {
    if (a.parent() != b.parent() || a.parent() == nullptr) {
        throw ParentMismatch("group algebra elements have different parent groups");
    }
}

} // namespace

QGElement::QGElement(const FiniteGroup* parent, std::map<int, mpq_class> coeffs)
    : parent_(parent), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        // GMP does not canonicalize rationals built from a numerator and
        // denominator, and mpq comparison is only correct on canonical
        // values; every element construction funnels through here.
        it->second.canonicalize();
        if (it->second == 0) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
}

mpq_class QGElement::coeff(int element) const {
    auto it = coeffs_.find(element);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

QGElement QGElement::zero(const FiniteGroup& G) { return QGElement(&G); }

QGElement QGElement::one(const FiniteGroup& G) { return basis(G, G.identity); }

QGElement QGElement::basis(const FiniteGroup& G, int element, const mpq_class& c) {
    if (element < 0 || element >= G.order) {
        throw BadParameter("element index out of range for basis element");
    }
    std::map<int, mpq_class> m;
    if (c != 0) m[element] = c;
    return QGElement(&G, std::move(m));
}

QGElement add(const QGElement& a, const QGElement& b) {
    require_same_parent(a, b);
    std::map<int, mpq_class> m = a.coeffs();
    for (const auto& [x, c] : b.coeffs()) m[x] += c;
    return QGElement(a.parent(), std::move(m));
}

QGElement subtract(const QGElement& a, const QGElement& b) {
    require_same_parent(a, b);
    std::map<int, mpq_class> m = a.coeffs();
    for (const auto& [x, c] : b.coeffs()) m[x] -= c;
    return QGElement(a.parent(), std::move(m));
}

QGElement scale(const mpq_class& c, const QGElement& a) {
    if (a.parent() == nullptr) throw ParentMismatch("cannot scale an unattached element");
    std::map<int, mpq_class> m;
    if (c != 0) {
        for (const auto& [x, cx] : a.coeffs()) m[x] = c * cx;
    }
    return QGElement(a.parent(), std::move(m));
}

QGElement multiply(const QGElement& a, const QGElement& b) {
    require_same_parent(a, b);
    const FiniteGroup& G = *a.parent();
    std::map<int, mpq_class> m;
    for (const auto& [x, cx] : a.coeffs()) {
        for (const auto& [y, cy] : b.coeffs()) {
            m[G.mul(x, y)] += cx * cy;
        }
    }
    return QGElement(a.parent(), std::move(m));
}

QGElement conjugate(const QGElement& a, int t) {
    if (a.parent() == nullptr) throw ParentMismatch("cannot conjugate an unattached element");
    const FiniteGroup& G = *a.parent();
    if (t < 0 || t >= G.order) throw BadParameter("conjugating element index out of range");
    std::map<int, mpq_class> m;
    for (const auto& [x, c] : a.coeffs()) m[G.conj(x, t)] = c;
    return QGElement(a.parent(), std::move(m));
}

QGElement power(const QGElement& a, long long e) {
    if (a.parent() == nullptr) throw ParentMismatch("cannot exponentiate an unattached element");
    if (e < 0) throw BadParameter("negative powers are not defined in the group algebra");
    QGElement result = QGElement::one(*a.parent());
    QGElement base = a;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

QGElement hat(const Subgroup& S) {
    if (S.parent == nullptr) throw ParentMismatch("subgroup has no parent group");
    mpq_class c(1, S.order());
    std::map<int, mpq_class> m;
    for (int x : S.members) m[x] = c;
    return QGElement(S.parent, std::move(m));
}

std::vector<Subgroup> minimal_normals_above(const Subgroup& H, const Subgroup& K) {
    if (H.parent == nullptr || H.parent != K.parent) {
        throw ParentMismatch("subgroup pair has mismatched parent groups");
    }
    const FiniteGroup& G = *H.parent;
    if (!H.contains_all(K)) throw NotNormal("the second subgroup is not contained in the first");
    if (!is_normal_in(G, K, H)) throw NotNormal("the second subgroup is not normal in the first");
    if (H.order() == K.order()) return {};

    // Work in H/K: minimal nontrivial normal subgroups of the quotient, lifted
    // back to subgroups of the parent.  When H is the whole group the parent
    // serves directly; re-indexing it would rebuild its entire table.
    std::optional<SubgroupGroup> hg;
    const FiniteGroup* work = &G;
    Subgroup k_local = K;
    if (H.order() != G.order) {
        hg.emplace(group_of_subgroup(G, H));
        work = &hg->group;
        k_local = Subgroup{work, {}};
        for (int x : K.members) k_local.members.push_back(hg->from_parent.at(x));
        std::sort(k_local.members.begin(), k_local.members.end());
    }
    QuotientMap q = quotient(*work, k_local);

    std::vector<Subgroup> normals = all_normal_subgroups(q.group);
    std::vector<Subgroup> minimal;
    for (const Subgroup& M : normals) {
        if (M.order() == 1) continue;
        bool is_minimal = true;
        for (const Subgroup& L : normals) {
            if (L.order() == 1 || L.order() >= M.order()) continue;
            if (M.contains_all(L)) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(M);
    }

    std::vector<Subgroup> lifted;
    for (const Subgroup& M : minimal) {
        Subgroup up{&G, {}};
        for (int local = 0; local < work->order; ++local) {
            if (M.contains(q.projection[local])) {
                up.members.push_back(hg ? hg->to_parent[local] : local);
            }
        }
        std::sort(up.members.begin(), up.members.end());
        lifted.push_back(std::move(up));
    }
    std::sort(lifted.begin(), lifted.end());
    return lifted;
}

QGElement epsilon(const Subgroup& H, const Subgroup& K) {
    std::vector<Subgroup> minimal = minimal_normals_above(H, K);
    QGElement k_hat = hat(K);
    if (minimal.empty()) return k_hat; // H == K
    QGElement result = QGElement::one(*H.parent);
    for (const Subgroup& M : minimal) {
        result = multiply(result, subtract(k_hat, hat(M)));
    }
    return result;
}

std::vector<QGElement> distinct_epsilon_conjugates(const FiniteGroup& G, const Subgroup& H,
                                                   const Subgroup& K) {
    if (H.parent != &G || K.parent != &G) {
        throw ParentMismatch("subgroup pair does not belong to the given group");
    }
    QGElement eps = epsilon(H, K);
    // Walk the orbit of the pair (H, K) under conjugation.  Every group
    // element is a word in the generators, and conjugating first by t and
    // then by a generator s equals conjugating by t*s, so a breadth-first
    // walk that carries one conjugating element per pair covers the orbit.
    std::vector<int> gens = generating_set(G);
    struct Node {
        Subgroup h, k;
        int t;
    };
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<Node> orbit = {{H, K, G.identity}};
    seen.insert({H.members, K.members});
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (int s : gens) {
            Subgroup hs = conjugate_subgroup(G, orbit[i].h, s);
            Subgroup ks = conjugate_subgroup(G, orbit[i].k, s);
            if (!seen.insert({hs.members, ks.members}).second) continue;
            orbit.push_back({std::move(hs), std::move(ks), G.mul(orbit[i].t, s)});
        }
    }
    std::vector<QGElement> distinct;
    for (const Node& node : orbit) {
        QGElement c = conjugate(eps, node.t);
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) {
            distinct.push_back(std::move(c));
        }
    }
    return distinct;
}

QGElement e_idempotent(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    QGElement total = QGElement::zero(G);
    for (const QGElement& c : distinct_epsilon_conjugates(G, H, K)) total = add(total, c);
    return total;
}

bool is_idempotent(const QGElement& x) { return multiply(x, x) == x; }

bool are_orthogonal(const QGElement& x, const QGElement& y) {
    return multiply(x, y).is_zero() && multiply(y, x).is_zero();
}

bool is_central(const QGElement& x) {
    if (x.parent() == nullptr) throw ParentMismatch("element has no parent group");
    const FiniteGroup& G = *x.parent();
    for (int g : generating_set(G)) {
        QGElement gx = QGElement::basis(G, g);
        if (multiply(gx, x) != multiply(x, gx)) return false;
    }
    return true;
}

} // namespace zcu

#include "zcu/bass.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <omp.h>

#include "zcu/errors.hpp"
#include "zcu/wedderburn.hpp"

namespace zcu {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

mpz_class mpz_pow(long long base, long long e) {
    mpz_class r;
    mpz_class b(static_cast<long>(base));
    if (e < 0) throw BadParameter("negative exponent in integer power");
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// ---- modular kernel for the minimal-exponent search ------------------------
//
// gbu_base(G, M, g, k, m)^e is integral exactly when u_{k,me}(gM), computed
// in the cyclic algebra (Z/|M|Z)[<gM>], is congruent to the identity: the
// power lives in 1 + (u_{k,me}(gM) - 1)*hat(M) and hat(M) spreads each coset
// coefficient over |M| elements.  Since u_{k,ma}*u_{k,mb} = u_{k,m(a+b)},
// the admissible e form the multiples of the order of w = u_{k,m}(gM) in the
// finite unit group, found by incremental powering.

std::vector<long long> conv_mod(const std::vector<long long>& a, const std::vector<long long>& b,
                                long long mod) {
    const size_t d = a.size();
    std::vector<long long> r(d, 0);
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            size_t l = i + j;
            if (l >= d) l -= d;
            r[l] = (r[l] + a[i] * b[j]) % mod;
        }
    }
    return r;
}

std::vector<long long> pow_mod_vec(std::vector<long long> base, long long e, long long mod) {
    const size_t d = base.size();
    std::vector<long long> r(d, 0);
    r[0] = 1 % mod;
    while (e > 0) {
        if (e & 1) r = conv_mod(r, base, mod);
        e >>= 1;
        if (e > 0) base = conv_mod(base, base, mod);
    }
    return r;
}

// Order of w = u_{k,m}(x) in (Z/mod Z)[x]/(x^d - 1), or -1 past cap.
long long order_of_w(long long d, long long k, long long m, long long mod, long long cap) {
    std::vector<long long> base(static_cast<size_t>(d), 0);
    for (long long i = 0; i < k; ++i) base[static_cast<size_t>(i % d)] = (base[i % d] + 1) % mod;
    std::vector<long long> w = pow_mod_vec(std::move(base), m, mod);
    const mpz_class dz(static_cast<long>(d)), modz(static_cast<long>(mod));
    mpz_class t = (1 - mpz_pow(k, m)) / dz; // exact: k^m == 1 mod d
    long long tl = mpz_class(((t % modz) + modz) % modz).get_si();
    for (auto& c : w) c = (c + tl) % mod;
    std::vector<long long> id(static_cast<size_t>(d), 0);
    id[0] = 1 % mod;
    std::vector<long long> acc = w;
    for (long long e = 1; e <= cap; ++e) {
        if (acc == id) return e;
        acc = conv_mod(acc, w, mod);
    }
    return -1;
}

// One deduplicated (d = |gM|, |g|) class of the search; `rep` names a parent
// element of the class for diagnostics.
struct NClass {
    long long d = 1;
    long long gorder = 1;
    int rep = 0;
};

struct NClassResult {
    long long value = 1;     // lcm of the per-k orders
    long long max_order = 1; // largest single order seen
    long long max_k = 0;
    std::string error;       // nonempty: search for (rep, k) passed cap
};

NClassResult n_class_lcm(const FiniteGroup& G, const NClass& c, long long mod, long long cap) {
    NClassResult out;
    for (long long k = 2; k < c.gorder; ++k) {
        if (std::gcd(k, c.gorder) != 1) continue;
        long long m = multiplicative_order(k, c.gorder);
        long long o = order_of_w(c.d, k, m, mod, cap);
        if (o < 0) {
            std::ostringstream msg;
            msg << "minimal-exponent search passed cap=" << cap << " at g=" << G.label(c.rep)
                << ", k=" << k;
            out.error = msg.str();
            return out;
        }
        if (o > out.max_order) {
            out.max_order = o;
            out.max_k = k;
        }
        out.value = std::lcm(out.value, o);
        if (out.value > cap) {
            std::ostringstream msg;
            msg << "minimal exponent exceeds cap=" << cap << " at g=" << G.label(c.rep)
                << ", k=" << k;
            out.error = msg.str();
            return out;
        }
    }
    return out;
}

std::vector<NClass> n_classes(const FiniteGroup& G, const Subgroup& M, const QuotientMap& Q) {
    std::map<std::pair<long long, long long>, int> reps;
    for (int g = 0; g < G.order; ++g) {
        if (M.contains(g)) continue;
        long long o = element_order(G, g);
        if (o <= 2) continue;
        long long d = element_order(Q.group, Q.projection[static_cast<size_t>(g)]);
        reps.try_emplace({d, o}, g);
    }
    std::vector<NClass> cs;
    cs.reserve(reps.size());
    for (const auto& [key, rep] : reps) cs.push_back({key.first, key.second, rep});
    return cs;
}

long long combine_n_classes(const FiniteGroup& G, const std::vector<NClass>& cs,
                            const std::vector<NClassResult>& rs, long long cap) {
    for (const auto& r : rs)
        if (!r.error.empty()) throw CapExceeded(r.error);
    long long total = 1;
    long long best = 1;
    size_t best_i = 0;
    for (size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].max_order > best) {
            best = rs[i].max_order;
            best_i = i;
        }
        total = std::lcm(total, rs[i].value);
        if (total > cap) {
            std::ostringstream msg;
            msg << "minimal exponent exceeds cap=" << cap << " at g=" << G.label(cs[best_i].rep)
                << ", k=" << rs[best_i].max_k;
            throw CapExceeded(msg.str());
        }
    }
    return total;
}

// ---- exact linear algebra for unit inversion --------------------------------

// Solves A*y = rhs exactly (A square over mpz, fraction-free Bareiss
// elimination, rational back-substitution).  Returns false when singular.
bool solve_exact(std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> rhs,
                 std::vector<mpq_class>& y) {
    const size_t d = A.size();
    mpz_class prev(1);
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && A[piv][col] == 0) ++piv;
        if (piv == d) return false;
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(rhs[piv], rhs[col]);
        }
        for (size_t i = col + 1; i < d; ++i) {
            for (size_t j = col + 1; j < d; ++j)
                A[i][j] = (A[col][col] * A[i][j] - A[i][col] * A[col][j]) / prev;
            rhs[i] = (A[col][col] * rhs[i] - A[i][col] * rhs[col]) / prev;
            A[i][col] = 0;
        }
        prev = A[col][col];
    }
    y.assign(d, 0);
    for (size_t ii = d; ii-- > 0;) {
        mpq_class acc(rhs[ii]);
        for (size_t j = ii + 1; j < d; ++j) acc -= mpq_class(A[ii][j]) * y[j];
        acc /= mpq_class(A[ii][ii]);
        acc.canonicalize();
        y[ii] = acc;
    }
    return true;
}

} // namespace

bool is_integral(const QGElement& x) {
    for (const auto& [g, c] : x.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

ZGElement require_integral(const QGElement& x) {
    for (const auto& [g, c] : x.coeffs())
        if (c.get_den() != 1) {
            std::ostringstream msg;
            msg << "element is not integral: coefficient " << c.get_str() << " at "
                << x.parent()->label(g);
            throw BadParameter(msg.str());
        }
    return x;
}

mpq_class augmentation(const QGElement& x) {
    mpq_class s(0);
    for (const auto& [g, c] : x.coeffs()) s += c;
    return s;
}

QGElement inverse_unit(const QGElement& u) {
    const FiniteGroup* G = u.parent();
    if (!G || u.is_zero()) throw BadParameter("not a unit: zero or parentless element");
    std::vector<int> sup;
    sup.reserve(u.coeffs().size());
    for (const auto& [g, c] : u.coeffs()) sup.push_back(g);
    Subgroup S = subgroup_generated(*G, sup);
    const size_t d = static_cast<size_t>(S.order());
    std::map<int, size_t> pos;
    for (size_t i = 0; i < d; ++i) pos[S.members[i]] = i;

    // Clear denominators: solve (L*u) * y = 1, then the inverse is L*y.
    mpz_class L(1);
    for (const auto& [g, c] : u.coeffs()) {
        const mpz_class den(c.get_den());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<std::vector<mpz_class>> A(d, std::vector<mpz_class>(d, 0));
    std::vector<mpz_class> rhs(d, 0);
    for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < d; ++c) {
            int a = G->mul(S.members[r], G->inv[S.members[c]]);
            mpq_class v = u.coeff(a) * mpq_class(L);
            A[r][c] = v.get_num(); // exact: denominator cleared
        }
        rhs[r] = (S.members[r] == G->identity) ? 1 : 0;
    }
    std::vector<mpq_class> y;
    if (!solve_exact(std::move(A), std::move(rhs), y))
        throw BadParameter("not a unit: singular multiplication matrix");
    std::map<int, mpq_class> coeffs;
    for (size_t i = 0; i < d; ++i) {
        mpq_class v = y[i] * mpq_class(L);
        v.canonicalize();
        if (v != 0) coeffs[S.members[i]] = v;
    }
    QGElement inv(G, std::move(coeffs));
    if (multiply(u, inv) != QGElement::one(*G)) throw BadParameter("not a unit: no inverse");
    return inv;
}

ZGElement bass_unit(const FiniteGroup& G, int g, long long k, long long m) {
    if (g < 0 || g >= G.order) throw BadParameter("bass_unit: element out of range");
    if (k < 1 || m < 1) throw BadParameter("bass_unit: k and m must be positive");
    const long long n = element_order(G, g);
    if (std::gcd(k, n) != 1) throw BadParameter("bass_unit: k must be coprime to |g|");
    if (mod_pow(k % n, m, n) != 1 % n) throw BadParameter("bass_unit: k^m != 1 mod |g|");

    std::map<int, mpq_class> s;
    for (long long i = 0; i < k; ++i) s[G.power(g, i)] += 1;
    QGElement head = power(QGElement(&G, std::move(s)), m);

    mpq_class t(1 - mpz_pow(k, m));
    t /= mpq_class(static_cast<long>(n)); // exact by the k^m check
    t.canonicalize();
    std::map<int, mpq_class> tail;
    for (long long i = 0; i < n; ++i) tail[G.power(g, i)] = t;
    return require_integral(add(head, QGElement(&G, std::move(tail))));
}

QGElement gbu_base(const FiniteGroup& G, const Subgroup& M, int g, long long k, long long m) {
    if (M.parent != &G) throw ParentMismatch("gbu_base: M belongs to a different group");
    if (!is_normal(G, M)) throw NotNormal("gbu_base: M is not normal");
    QGElement hm = hat(M);
    QGElement u = bass_unit(G, g, k, m);
    return add(subtract(QGElement::one(G), hm), multiply(u, hm));
}

long long n_gM(const FiniteGroup& G, const Subgroup& M, int g, long long cap) {
    if (cap <= 0) cap = 4LL * G.order;
    if (g < 0 || g >= G.order) throw BadParameter("n_gM: element out of range");
    if (M.contains(g) || element_order(G, g) <= 2) return 1;
    QuotientMap Q = quotient(G, M);
    NClass c{element_order(Q.group, Q.projection[static_cast<size_t>(g)]), element_order(G, g), g};
    NClassResult r = n_class_lcm(G, c, M.order(), cap);
    return combine_n_classes(G, {c}, {r}, cap);
}

long long n_GM(const FiniteGroup& G, const Subgroup& M, long long cap, int jobs) {
    if (cap <= 0) cap = 4LL * G.order;
    if (M.parent != &G) throw ParentMismatch("n_GM: M belongs to a different group");
    if (M.order() == 1 || M.order() == G.order) return 1;
    QuotientMap Q = quotient(G, M); // throws NotNormal for non-normal M
    const std::vector<NClass> cs = n_classes(G, M, Q);
    if (cs.empty()) return 1;
    const long long mod = M.order();
    std::vector<NClassResult> rs(cs.size());
    if (jobs == 1) {
        for (size_t i = 0; i < cs.size(); ++i) rs[i] = n_class_lcm(G, cs[i], mod, cap);
    } else {
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(cs.size()); ++i)
            rs[static_cast<size_t>(i)] = n_class_lcm(G, cs[static_cast<size_t>(i)], mod, cap);
    }
    return combine_n_classes(G, cs, rs, cap);
}

long long n_for_record(const ShodaPairRecord& rec, long long cap, int jobs) {
    const FiniteGroup& PG = *rec.H.parent;
    if (rec.H.order() == PG.order) return n_GM(PG, rec.K, cap, jobs);
    SubgroupGroup sg = group_of_subgroup(PG, rec.H);
    Subgroup k_local{&sg.group, {}};
    for (int x : rec.K.members) k_local.members.push_back(sg.from_parent.at(x));
    std::sort(k_local.members.begin(), k_local.members.end());
    return n_GM(sg.group, k_local, cap, jobs);
}

namespace {

// Inverse of an element of the form (1 - hat(K)) + w*hat(K): inverts the
// coset-graded vector in the [H:K]-dimensional algebra Q[H/K] and rebuilds,
// falling back to the generic linear solve when the shape does not hold.
QGElement inverse_coset_form(const ShodaPairRecord& rec, const QGElement& u) {
    const FiniteGroup& G = *rec.H.parent;
    const long long q = rec.q;
    std::vector<mpq_class> x(static_cast<size_t>(q), 0);
    bool in_h = true;
    for (const auto& [g, c] : u.coeffs()) {
        auto it = rec.coset_exponent.find(g);
        if (it == rec.coset_exponent.end()) {
            in_h = false;
            break;
        }
        x[static_cast<size_t>(it->second)] += c;
    }
    if (in_h) {
        // Solve x * y = 1 in Q[X]/(X^q - 1) by Gaussian elimination.
        std::vector<std::vector<mpq_class>> A(static_cast<size_t>(q),
                                              std::vector<mpq_class>(static_cast<size_t>(q), 0));
        for (long long r = 0; r < q; ++r)
            for (long long c = 0; c < q; ++c) A[r][c] = x[static_cast<size_t>(((r - c) % q + q) % q)];
        std::vector<mpq_class> y(static_cast<size_t>(q), 0), rhs(static_cast<size_t>(q), 0);
        rhs[0] = 1;
        bool ok = true;
        for (size_t col = 0; col < static_cast<size_t>(q) && ok; ++col) {
            size_t piv = col;
            while (piv < static_cast<size_t>(q) && A[piv][col] == 0) ++piv;
            if (piv == static_cast<size_t>(q)) {
                ok = false;
                break;
            }
            std::swap(A[piv], A[col]);
            std::swap(rhs[piv], rhs[col]);
            for (size_t i = 0; i < static_cast<size_t>(q); ++i) {
                if (i == col || A[i][col] == 0) continue;
                mpq_class f = A[i][col] / A[col][col];
                for (size_t j = col; j < static_cast<size_t>(q); ++j) A[i][j] -= f * A[col][j];
                rhs[i] -= f * rhs[col];
            }
        }
        if (ok) {
            for (size_t i = 0; i < static_cast<size_t>(q); ++i) y[i] = rhs[i] / A[i][i];
            QGElement hk = hat(rec.K);
            std::map<int, mpq_class> w;
            for (long long j = 0; j < q; ++j) {
                mpq_class v = y[static_cast<size_t>(j)];
                v.canonicalize();
                if (v != 0) w[G.power(rec.g, j)] = v;
            }
            QGElement inv = add(subtract(QGElement::one(G), hk),
                                multiply(QGElement(&G, std::move(w)), hk));
            if (multiply(u, inv) == QGElement::one(G)) return inv;
        }
    }
    return inverse_unit(u);
}

// Bass unit of the coset element g*hat(K) + (1 - hat(K)), whose cyclic order
// is the coset order |gK|.  Evaluating the Bass polynomial at
// x = (1 - hat(K)) + g*hat(K) blockwise gives
//   (1 - hat(K)) + [(1+g+...+g^{k-1})^m + ((1-k^m)/|gK|)(1+g+...+g^{|gK|-1})]*hat(K),
// valid whenever (k, |gK|) = 1 and k^m == 1 (mod |gK|); the order of g in the
// ambient group plays no role.  Precondition: g normalizes K.
QGElement gbu_on_coset(const FiniteGroup& G, const Subgroup& K, int g, long long k,
                       long long m) {
    long long n = 1;
    for (int x = g; !K.contains(x); x = G.mul(x, g)) ++n;
    if (k < 1 || m < 1 || std::gcd(k, n) != 1 ||
        mod_pow(((k % n) + n) % n, m, n) != 1 % n)
        throw BadParameter("tower unit: invalid bass parameters for coset order " +
                           std::to_string(n));
    std::map<int, mpq_class> hc, tc;
    for (long long i = 0; i < k; ++i) hc[G.power(g, i)] += 1;
    for (long long i = 0; i < n; ++i) tc[G.power(g, i)] += 1;
    QGElement head = power(QGElement(&G, std::move(hc)), m);
    mpz_class t = (1 - mpz_pow(k, m)) / static_cast<long>(n);  // exact by k^m == 1 mod n
    QGElement u = add(head, scale(mpq_class(t), QGElement(&G, std::move(tc))));
    QGElement hk = hat(K);
    return add(subtract(QGElement::one(G), hk), multiply(u, hk));
}

struct CUnitEngine {
    const ShodaPairRecord& rec;
    const FiniteGroup& G;
    long long p = 1;
    int n = 0;
    long long n_hk = 1;
    std::map<std::tuple<int, int, long long, long long>, ZGElement> memo;

    CUnitEngine(const ShodaPairRecord& r, long long nhk)
        : rec(r), G(*r.H.parent), n_hk(nhk) {
        if (rec.q_factorization.size() > 1)
            throw PrimePowerRequired("c_unit: [H:K] is not a prime power");
        if (!rec.q_factorization.empty()) {
            p = rec.q_factorization[0].prime;
            n = rec.q_factorization[0].exponent;
        }
    }

    ZGElement compute(int j, int s, long long k, long long r) {
        if (j < 0 || j > s || s > n) throw BadParameter("c_unit: need 0 <= j <= s <= n");
        if (k < 1 || (rec.q > 1 && std::gcd(k, p) != 1))
            throw BadParameter("c_unit: k must be positive and coprime to p");
        if (j == s) return QGElement::one(G);
        const long long q = rec.q;
        const auto key = std::make_tuple(j, s, k, ((r % q) + q) % q);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const long long m = multiplicative_order(((k % q) + q) % q, q) * n_hk;
        const int base = G.power(rec.g, r * pow_ll(p, n - s));
        QGElement prod = QGElement::one(G);
        const long long step = pow_ll(p, n - j);
        for (long long t = 0; t < pow_ll(p, j); ++t) {
            int h = G.power(rec.g, t * step);
            prod = multiply(prod, gbu_on_coset(G, rec.K, G.mul(base, h), k, m));
        }
        prod = power(prod, pow_ll(p, s - j - 1));
        for (int l = j + 1; l <= s - 1; ++l)
            prod = multiply(prod, inverse_coset_form(rec, compute(l, s, k, r)));
        for (int l = 0; l <= j - 1; ++l)
            prod = multiply(prod, inverse_coset_form(rec, compute(l, s + l - j, k, r)));
        ZGElement out = require_integral(prod);
        memo.emplace(key, out);
        return out;
    }
};

} // namespace

QGElement inverse_unit(const ShodaPairRecord& rec, const QGElement& u) {
    return inverse_coset_form(rec, u);
}

ZGElement c_unit(const ShodaPairRecord& rec, int j, int s, long long k, long long r) {
    CUnitEngine eng(rec, n_for_record(rec));
    return eng.compute(j, s, k, r);
}

std::vector<ZGElement> b_set(const ShodaPairRecord& rec) {
    std::vector<int> I = i_set(rec);
    if (I.size() <= 1) return {};
    const ActionImage img = action_image(rec);
    CUnitEngine eng(rec, n_for_record(rec));
    std::vector<ZGElement> out;
    for (int k : I) {
        if (k == 1) continue;
        QGElement u = QGElement::one(eng.G);
        for (int x : img.residues) u = multiply(u, eng.compute(0, eng.n, k, x));
        out.push_back(require_integral(u));
    }
    return out;
}

std::vector<ZGElement> script_b_set(const ShodaPairRecord& rec) {
    const FiniteGroup& G = *rec.H.parent;
    std::vector<int> T;
    std::vector<char> covered(static_cast<size_t>(G.order), 0);
    for (int t = 0; t < G.order; ++t) {
        if (covered[static_cast<size_t>(t)]) continue;
        T.push_back(t);
        for (int nn : rec.N.members) covered[static_cast<size_t>(G.mul(nn, t))] = 1;
    }
    std::vector<ZGElement> out;
    for (const ZGElement& u : b_set(rec)) {
        QGElement prod = QGElement::one(G);
        for (int t : T) prod = multiply(prod, conjugate(u, t));
        out.push_back(require_integral(prod));
    }
    return out;
}

std::vector<ZGElement> virtual_basis(const SspFamily& fam) {
    if (!fam.complete)
        throw IncompleteFamily("virtual basis requires a complete family of strong Shoda pairs");
    std::vector<ZGElement> out;
    for (const auto& rec : fam.records)
        for (auto& u : b_set(rec)) out.push_back(std::move(u));
    return out;
}

CyclotomicNumber cyclotomic_eta(long long k, long long n, long long j) {
    if (k < 1 || n < 1) throw BadParameter("cyclotomic_eta: k and n must be positive");
    if (n == 1) return CyclotomicNumber::one(1);
    std::vector<mpq_class> e(static_cast<size_t>(n), 0);
    for (long long i = 0; i < k; ++i) e[static_cast<size_t>(((i * j) % n + n) % n)] += 1;
    return CyclotomicNumber::from_exponents(n, e);
}

CyclotomicNumber project_central_unit(const ShodaPairRecord& rec, const QGElement& u) {
    const FiniteGroup& G = *rec.H.parent;
    if (u.parent() != &G) throw ParentMismatch("project_central_unit: wrong parent group");
    std::vector<mpq_class> x(static_cast<size_t>(rec.q), 0);
    for (const auto& [g, c] : u.coeffs()) {
        auto it = rec.coset_exponent.find(g);
        if (it == rec.coset_exponent.end())
            throw NotCentral("project_central_unit: support reaches outside H");
        x[static_cast<size_t>(it->second)] += c;
    }
    QGElement v = multiply(u, rec.epsilon);
    for (int t : rec.N.members)
        if (conjugate(v, t) != v)
            throw NotCentral("project_central_unit: not central under the normalizer action");
    return CyclotomicNumber::from_exponents(rec.q, x);
}

} // namespace zcu

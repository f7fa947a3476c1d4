#include "zcu/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace zcu {

std::vector<PrimePower> factorize(long long n) {
    if (n < 1) throw BadParameter("factorize requires a positive integer");
    std::vector<PrimePower> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

long long euler_phi(long long n) {
    long long phi = 1;
    for (const PrimePower& pp : factorize(n)) {
        long long q = pp.prime;
        for (int i = 1; i < pp.exponent; ++i) q *= pp.prime;
        phi *= q - q / pp.prime;
    }
    return phi;
}

bool is_prime_power(long long n, long long* prime, int* exponent) {
    if (n < 2) return false;
    std::vector<PrimePower> f = factorize(n);
    if (f.size() != 1) return false;
    if (prime) *prime = f[0].prime;
    if (exponent) *exponent = f[0].exponent;
    return true;
}

long long mod_pow(long long k, long long e, long long n) {
    if (n < 1) throw BadParameter("mod_pow requires a positive modulus");
    if (e < 0) throw BadParameter("mod_pow requires a non-negative exponent");
    unsigned long long r = 1 % static_cast<unsigned long long>(n);
    unsigned long long b = static_cast<unsigned long long>(((k % n) + n) % n);
    while (e > 0) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return static_cast<long long>(r);
}

long long mod_inverse(long long k, long long n) {
    if (n < 1) throw BadParameter("mod_inverse requires a positive modulus");
    long long a = ((k % n) + n) % n;
    if (std::gcd(a, n) != 1) throw BadParameter("mod_inverse of a non-unit residue");
    if (n == 1) return 0;
    // Extended Euclid.
    long long r0 = n, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return ((s0 % n) + n) % n;
}

long long multiplicative_order(long long k, long long n) {
    if (n < 1) throw BadParameter("multiplicative_order requires a positive modulus");
    long long a = ((k % n) + n) % n;
    if (std::gcd(a, n) != 1) throw BadParameter("multiplicative_order of a non-unit residue");
    if (n == 1) return 1;
    long long x = a % n, e = 1;
    while (x != 1) {
        x = x * a % n;
        ++e;
    }
    return e;
}

std::vector<long long> unit_group_mod(long long n) {
    if (n < 1) throw BadParameter("unit_group_mod requires a positive modulus");
    if (n == 1) return {0};
    std::vector<long long> out;
    for (long long x = 1; x < n; ++x) {
        if (std::gcd(x, n) == 1) out.push_back(x);
    }
    return out;
}

std::vector<long long> residue_subgroup(long long n, const std::vector<long long>& gens) {
    if (n < 1) throw BadParameter("residue_subgroup requires a positive modulus");
    if (n == 1) return {0};
    std::vector<long long> closure = {1};
    std::vector<long long> norm_gens;
    for (long long g : gens) {
        long long a = ((g % n) + n) % n;
        if (std::gcd(a, n) != 1) throw BadParameter("residue_subgroup generator is not a unit");
        norm_gens.push_back(a);
    }
    for (size_t i = 0; i < closure.size(); ++i) {
        for (long long g : norm_gens) {
            long long x = closure[i] * g % n;
            if (std::find(closure.begin(), closure.end(), x) == closure.end()) {
                closure.push_back(x);
            }
        }
    }
    std::sort(closure.begin(), closure.end());
    return closure;
}

// ---- Polynomial helpers (dense, ascending coefficients) --------------------

namespace {

// Exact division of integer polynomials, requiring den to be monic and the
// remainder to vanish.
std::vector<mpz_class> exact_divide(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const size_t dd = den.size() - 1;
    std::vector<mpz_class> q(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
        mpz_class c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const mpz_class& c : num) {
        if (c != 0) throw BadParameter("non-exact polynomial division");
    }
    return q;
}

void trim(std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of v modulo the monic integer polynomial m, in place.
void reduce_mod(std::vector<mpq_class>& v, const std::vector<mpz_class>& m) {
    const size_t dm = m.size() - 1;
    trim(v);
    while (v.size() > dm) {
        mpq_class c = v.back();
        size_t top = v.size() - 1;
        for (size_t j = 0; j <= dm; ++j) v[top - dm + j] -= c * mpq_class(m[j]);
        trim(v);
    }
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long long n) {
    if (n < 1) throw BadParameter("cyclotomic polynomial index must be positive");
    static std::map<long long, std::vector<mpz_class>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n, computed
    // iteratively so the cache fills bottom-up.
    for (long long m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        std::vector<mpz_class> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (long long d = 1; d < m; ++d) {
            if (m % d == 0) num = exact_divide(std::move(num), cache.at(d));
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

// ---- CyclotomicNumber -------------------------------------------------------

namespace {

void require_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor() != b.conductor() || a.conductor() == 0) {
        throw BadParameter("cyclotomic numbers have different conductors");
    }
}

} // namespace

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

mpq_class CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw BadParameter("cyclotomic number is not rational");
    return coords_.empty() ? mpq_class(0) : coords_[0];
}

CyclotomicNumber CyclotomicNumber::zero(long long n) {
    CyclotomicNumber x;
    x.conductor_ = n;
    x.coords_.assign(static_cast<size_t>(euler_phi(n)), mpq_class(0));
    return x;
}

CyclotomicNumber CyclotomicNumber::one(long long n) { return from_rational(n, 1); }

CyclotomicNumber CyclotomicNumber::from_rational(long long n, const mpq_class& c) {
    CyclotomicNumber x = zero(n);
    mpq_class v = c;
    v.canonicalize();
    x.coords_[0] = v;
    return x;
}

CyclotomicNumber CyclotomicNumber::zeta_power(long long n, long long j) {
    std::vector<mpq_class> e(static_cast<size_t>(n), mpq_class(0));
    e[static_cast<size_t>(((j % n) + n) % n)] = 1;
    return from_exponents(n, e);
}

CyclotomicNumber CyclotomicNumber::from_exponents(long long n, const std::vector<mpq_class>& coeff) {
    if (n < 1 || coeff.size() != static_cast<size_t>(n)) {
        throw BadParameter("exponent-basis coefficient vector must have length n");
    }
    std::vector<mpq_class> v = coeff;
    for (mpq_class& c : v) c.canonicalize();
    reduce_mod(v, cyclotomic_polynomial(n));
    CyclotomicNumber x = zero(n);
    for (size_t i = 0; i < v.size(); ++i) x.coords_[i] = v[i];
    return x;
}

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_conductor(a, b);
    std::vector<mpq_class> e(static_cast<size_t>(a.conductor()), mpq_class(0));
    for (size_t i = 0; i < a.coords().size(); ++i) e[i] = a.coords()[i] + b.coords()[i];
    return CyclotomicNumber::from_exponents(a.conductor(), e);
}

CyclotomicNumber subtract(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return add(a, scale(-1, b));
}

CyclotomicNumber scale(const mpq_class& c, const CyclotomicNumber& a) {
    std::vector<mpq_class> e(static_cast<size_t>(a.conductor()), mpq_class(0));
    mpq_class cc = c;
    cc.canonicalize();
    for (size_t i = 0; i < a.coords().size(); ++i) e[i] = cc * a.coords()[i];
    return CyclotomicNumber::from_exponents(a.conductor(), e);
}

CyclotomicNumber multiply(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_conductor(a, b);
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    std::vector<mpq_class> prod(ca.size() + cb.size(), mpq_class(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] == 0) continue;
            prod[i + j] += ca[i] * cb[j];
        }
    }
    reduce_mod(prod, cyclotomic_polynomial(a.conductor()));
    prod.resize(static_cast<size_t>(a.conductor()), mpq_class(0));
    return CyclotomicNumber::from_exponents(a.conductor(), prod);
}

CyclotomicNumber power(const CyclotomicNumber& a, long long e) {
    if (e < 0) throw BadParameter("cyclotomic power requires a non-negative exponent");
    CyclotomicNumber result = CyclotomicNumber::one(a.conductor());
    CyclotomicNumber base = a;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

CyclotomicNumber galois(const CyclotomicNumber& a, long long j) {
    long long n = a.conductor();
    long long jj = ((j % n) + n) % n;
    if (std::gcd(jj, n) != 1) throw BadParameter("galois exponent must be coprime to the conductor");
    std::vector<mpq_class> e(static_cast<size_t>(n), mpq_class(0));
    for (size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i] == 0) continue;
        e[static_cast<size_t>(static_cast<long long>(i) * jj % n)] += a.coords()[i];
    }
    return CyclotomicNumber::from_exponents(n, e);
}

mpq_class field_norm(const CyclotomicNumber& a) {
    long long n = a.conductor();
    CyclotomicNumber prod = CyclotomicNumber::one(n);
    for (long long j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        prod = multiply(prod, galois(a, j));
    }
    if (!prod.is_rational()) throw BadParameter("norm failed to land in the rationals");
    return prod.rational_value();
}

} // namespace zcu

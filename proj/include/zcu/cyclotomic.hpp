#pragma once

#include <vector>

#include <gmpxx.h>

#include "zcu/errors.hpp"

namespace zcu {

// ---- Integer number theory -------------------------------------------------

struct PrimePower {
    long long prime = 0;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Prime factorization of n >= 1 by trial division, primes ascending.
// factorize(1) is empty.  Throws BadParameter for n < 1.
std::vector<PrimePower> factorize(long long n);

long long euler_phi(long long n);

// True iff n == p^e with e >= 1; on success stores p and e when requested.
bool is_prime_power(long long n, long long* prime = nullptr, int* exponent = nullptr);

// k^e mod n (e >= 0, n >= 1), with the result in [0, n).
long long mod_pow(long long k, long long e, long long n);

// Multiplicative inverse of k mod n.  Throws BadParameter unless gcd(k,n)=1.
long long mod_inverse(long long k, long long n);

// Least e >= 1 with k^e == 1 mod n.  Throws BadParameter unless gcd(k,n)=1.
long long multiplicative_order(long long k, long long n);

// The units mod n, ascending (U(Z/1Z) = {0} by convention of a single class).
std::vector<long long> unit_group_mod(long long n);

// Multiplicative closure of the given residues mod n, ascending.  Each
// residue must be a unit mod n.
std::vector<long long> residue_subgroup(long long n, const std::vector<long long>& gens);

// ---- Cyclotomic fields -----------------------------------------------------

// The n-th cyclotomic polynomial, coefficients ascending, monic, degree
// phi(n).  Computed by exact division of x^n - 1 by the proper divisors'
// polynomials; memoized (thread-safe).
const std::vector<mpz_class>& cyclotomic_polynomial(long long n);

// An element of Q(zeta_n), stored on the power basis 1, zeta, ...,
// zeta^(phi(n)-1) with exact rational coordinates, reduced mod the n-th
// cyclotomic polynomial.  Values are immutable; operations on elements of
// different conductors throw BadParameter.
class CyclotomicNumber {
  public:
    CyclotomicNumber() = default;

    long long conductor() const { return conductor_; }
    const std::vector<mpq_class>& coords() const { return coords_; }
    bool is_zero() const;
    // True iff the element lies in Q (only the constant coordinate nonzero).
    bool is_rational() const;
    mpq_class rational_value() const; // requires is_rational()

    static CyclotomicNumber zero(long long n);
    static CyclotomicNumber one(long long n);
    static CyclotomicNumber from_rational(long long n, const mpq_class& c);
    // zeta_n^j for any integer j (reduced mod n).
    static CyclotomicNumber zeta_power(long long n, long long j);
    // From coefficients on the exponent basis zeta^0..zeta^(n-1), reduced.
    static CyclotomicNumber from_exponents(long long n, const std::vector<mpq_class>& coeff);

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

  private:
    long long conductor_ = 0;
    std::vector<mpq_class> coords_;
};

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber subtract(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber multiply(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber scale(const mpq_class& c, const CyclotomicNumber& a);
CyclotomicNumber power(const CyclotomicNumber& a, long long e); // e >= 0
// The Galois automorphism zeta -> zeta^j; requires gcd(j, n) = 1.
CyclotomicNumber galois(const CyclotomicNumber& a, long long j);
// Product of all Galois conjugates: the norm down to Q, always rational.
mpq_class field_norm(const CyclotomicNumber& a);

} // namespace zcu

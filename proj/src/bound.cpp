#include "zcu/bound.hpp"

#include <numeric>
#include <set>

#include "zcu/bass.hpp"
#include "zcu/cyclotomic.hpp"
#include "zcu/errors.hpp"

namespace zcu {

namespace {

mpz_class mpz_power(const mpz_class& base, long long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

mpz_class mpz_of(long long v) {
    return mpz_class(static_cast<long>(v));
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

long long h_plus(long long q, const std::map<long long, long long>* overrides) {
    if (q < 1) throw BadParameter("h_plus: conductor must be positive");
    if (overrides) {
        auto it = overrides->find(q);
        if (it != overrides->end()) return it->second;
    }
    static const std::set<long long> known_one{1,  2,  3,  4,  5,   7,   8,
                                               9,  11, 13, 16, 25,  27,  32,
                                               49, 64, 81, 121, 125, 128};
    if (known_one.count(q)) return 1;
    throw UnknownClassNumber("h_plus: no built-in value for conductor " +
                             std::to_string(q) + "; supply one explicitly");
}

int d_value(const ActionImage& img) {
    if (img.q <= 2) return 1;
    if (img.structure == ActionStructure::cyclic_times_minus_one) return 2;
    const long long r = img.structure == ActionStructure::trivial_action
                            ? 1
                            : static_cast<long long>(img.structure_r);
    for (long long x : residue_subgroup(img.q, {r}))
        if (x == img.q - 1) return 1;
    return 2;
}

int o_value(const ActionImage& img) {
    long long p = 0;
    int n = 0;
    if (img.q > 1 && !is_prime_power(img.q, &p, &n))
        throw PrimePowerRequired("o_value: [H:K] = " + std::to_string(img.q) +
                                 " is not a prime power");
    if (img.structure == ActionStructure::cyclic_times_minus_one) return 2;
    const long long r = img.structure == ActionStructure::trivial_action
                            ? 1
                            : static_cast<long long>(img.structure_r);
    if (p == 2 && n >= 2 && r % 4 == 1) return 4;
    if (p == 3 && r % 3 == 1) return 6;
    return 2;
}

namespace {

// The per-record covering of the two product forms in the index bound.
BoundRow make_row(int index, const ShodaPairRecord& rec, long long cap, int jobs,
                  const std::map<long long, long long>* overrides) {
    if (rec.q_factorization.size() != 1)
        throw PrimePowerRequired("index_bound: [H:K] = " + std::to_string(rec.q) +
                                 " is not a prime power");
    BoundRow row;
    row.ssp_index = index;
    row.q = rec.q;
    row.p = rec.q_factorization[0].prime;
    row.n = rec.q_factorization[0].exponent;
    const ActionImage img = action_image(rec);
    row.i_size = static_cast<int>(i_set(rec).size());
    row.d = d_value(img);
    row.o = o_value(img);
    row.l = std::lcm(2LL, row.p);
    row.index_n_in_h = rec.N.order() / rec.H.order();
    row.n_hk = n_for_record(rec, cap, jobs);
    if (row.i_size == 1) {
        row.factor = row.o;
        return row;
    }
    row.h_plus_q = h_plus(row.q, overrides);
    const long long pn1 = pow_ll(row.p, row.n - 1);
    row.frak_o = 1;
    for (long long k = 2; 2 * k < row.q; ++k) {
        if (std::gcd(k, row.p) != 1) continue;
        row.frak_o *= mpz_of(multiplicative_order(k, row.q) * pn1 * row.n_hk);
    }
    mpz_class repeated = mpz_power(mpz_of(row.l), row.d - 1) * mpz_of(row.index_n_in_h);
    row.factor = mpz_of(row.h_plus_q * row.l * pn1) * row.frak_o *
                 mpz_power(repeated, row.i_size - 1);
    return row;
}

} // namespace

BoundReport index_bound(const SspFamily& fam, long long cap, int jobs,
                        const std::map<long long, long long>* h_plus_overrides) {
    if (!fam.complete)
        throw IncompleteFamily("index_bound requires a complete family of strong Shoda pairs");
    BoundReport rep;
    rep.total = 2;
    for (size_t i = 1; i < fam.records.size(); ++i) {
        BoundRow row = make_row(static_cast<int>(i), fam.records[i], cap, jobs,
                                h_plus_overrides);
        rep.total *= row.factor;
        rep.rows.push_back(std::move(row));
    }
    rep.total_factored = factored_string(rep.total);
    return rep;
}

bool trivial_central_units(const SspFamily& fam) {
    return rank_central_units(fam) == 0;
}

mpz_class abelian_bound(const FiniteGroup& G, long long cap, int jobs,
                        const std::map<long long, long long>* h_plus_overrides) {
    if (!G.is_abelian()) throw NotAbelian("abelian_bound: the group is not abelian");
    if (G.order == 1) return 2;
    long long p = 0;
    int e = 0;
    if (!is_prime_power(G.order, &p, &e))
        throw BadParameter("abelian_bound: |G| = " + std::to_string(G.order) +
                           " is not a prime power");
    mpz_class total = p == 2 ? 2 : 1;
    for (const Subgroup& K : all_subgroups(G)) {
        QuotientMap Q = quotient(G, K);
        if (!cyclic_generator(Q.group)) continue;
        const long long q = Q.group.order;
        const int n = q == 1 ? 0 : factorize(q)[0].exponent;
        mpz_class factor = mpz_of(h_plus(q, h_plus_overrides)) * mpz_of(pow_ll(p, n));
        if (p != 2) factor *= 2;
        const long long ngk = n_GM(G, K, cap, jobs);
        for (long long k = 2; 2 * k < q; ++k) {
            if (std::gcd(k, p) != 1) continue;
            mpz_class t = mpz_of(multiplicative_order(k, q) * ngk);
            t *= mpz_of(pow_ll(p, n));
            if (p != 2) t *= 2;
            factor *= t;
        }
        total *= factor;
    }
    return total;
}

std::string factored_string(const mpz_class& x) {
    if (x == 0) return "0";
    mpz_class rest = x;
    std::string out;
    if (rest < 0) {
        out += "-";
        rest = -rest;
    }
    if (rest == 1) return out.empty() ? "1" : out + "1";
    std::vector<std::pair<mpz_class, long long>> parts;
    for (long long d = 2; d < 1000000 && rest > 1; d += (d == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) continue;
        long long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) {
            rest /= static_cast<long>(d);
            ++e;
        }
        parts.emplace_back(mpz_of(d), e);
    }
    if (rest > 1) parts.emplace_back(rest, 1);
    bool first = true;
    for (const auto& [base, e] : parts) {
        if (!first) out += " * ";
        first = false;
        out += base.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace zcu

#include "zcu/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace zcu {

namespace {

// A word in the generators: runs of (generator index, exponent).  Rewriting
// keeps exponents positive; relation words for the audit may use negative
// exponents (evaluated through the finished multiplication table).
using Word = std::vector<std::pair<int, int>>;

// A power-commutation presentation prepared for collection: normal forms are
// a^i b^j c^k d^l with 0 <= exponent < cap.  power_rhs[g] is the word equal
// to g^cap (empty = identity), swap_rhs[g][h] (g > h) is the word equal to
// the product g*h.
struct Presentation {
    int ngens = 0;
    std::array<int, 4> cap{};
    std::array<Word, 4> power_rhs{};
    std::array<std::array<Word, 4>, 4> swap_rhs{};
    // Generators known to be central in the presented group; lets the
    // collector use run-level rules when a swap word has a tail after the
    // higher generator (see SwapRule).
    std::array<bool, 4> central{};
    // Defining relations verbatim, as (display, lhs, rhs) for the audit.
    struct Relation {
        std::string display;
        Word lhs, rhs;
    };
    std::vector<Relation> relations;
    // Derived from swap_rhs by normalize_rule_words: g*h = L g R with L a
    // word in generators below g and R a (possibly empty) central tail.
    struct SwapRule {
        Word L, R;
        bool run_level = false;  // R empty or central: g h^f = L^f g R^f holds
    };
    std::array<std::array<SwapRule, 4>, 4> swap_rule{};
    // Order of each generator as a group element (cap when the power word is
    // empty; cap times the power word's order otherwise).  The collector
    // reduces run exponents mod this, which keeps them polynomially bounded.
    std::array<int, 4> true_order{};
};

void append_word(Word& w, const Word& tail) {
    w.insert(w.end(), tail.begin(), tail.end());
}

// Collection from the left: repeatedly rewrite the leftmost violation, where
// a violation is either a run at or above its exponent cap or an adjacent
// pair of runs in the wrong generator order.  Rewrites act on whole runs --
// letter-by-letter peeling makes step counts exponential in run lengths for
// presentations like b a = a^k b with k near the cap:
//   overflow: g^e = (g^cap)^q g^r          (q = e/cap, r = e%cap)
//   swap:     g^e h^f = g^(e-1) L^f g R^f  (from g h = L g R, R central)
// A step counter still guards against a malformed rule set.
Word collect(const Presentation& P, Word w) {
    long long steps = 0;
    for (;;) {
        if (++steps > 10'000'000)
            throw Error("collect: rewriting step limit exceeded (inconsistent rules?)");
        Word merged;
        for (auto [g, e] : w) {
            if (!merged.empty() && merged.back().first == g) {
                merged.back().second += e;
                merged.back().second %= P.true_order[g];
                if (merged.back().second == 0) merged.pop_back();
                continue;
            }
            e %= P.true_order[g];
            if (e != 0) merged.emplace_back(g, e);
        }
        w = std::move(merged);

        bool rewritten = false;
        for (size_t i = 0; i < w.size() && !rewritten; ++i) {
            auto [g, e] = w[i];
            if (e >= P.cap[g]) {
                const int q = e / P.cap[g], r = e % P.cap[g];
                Word nw(w.begin(), w.begin() + i);
                // (g^cap)^q: powers of g commute, so the replacement words
                // may be concatenated; a single-run word scales directly.
                const Word& pw = P.power_rhs[g];
                if (pw.size() == 1)
                    nw.emplace_back(pw[0].first, pw[0].second * q);
                else
                    for (int c = 0; c < q; ++c) append_word(nw, pw);
                if (r > 0) nw.emplace_back(g, r);
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                w = std::move(nw);
                rewritten = true;
            } else if (i + 1 < w.size() && g > w[i + 1].first) {
                auto [h, f] = w[i + 1];
                const auto& rule = P.swap_rule[g][h];
                Word nw(w.begin(), w.begin() + i);
                if (e > 1) nw.emplace_back(g, e - 1);
                if (rule.run_level) {
                    // One g crosses the whole h-run: g h^f = L^f g R^f.
                    if (rule.L.size() == 1)
                        nw.emplace_back(rule.L[0].first, rule.L[0].second * f);
                    else
                        for (int c = 0; c < f; ++c) append_word(nw, rule.L);
                    nw.emplace_back(g, 1);
                    // R's letters are central, so R^f scales run-wise.
                    for (auto [rg, re] : rule.R) nw.emplace_back(rg, re * f);
                } else {
                    // Basic one-letter rule: g h = L g R, h^(f-1) remains.
                    append_word(nw, rule.L);
                    nw.emplace_back(g, 1);
                    append_word(nw, rule.R);
                    if (f > 1) nw.emplace_back(h, f - 1);
                }
                nw.insert(nw.end(), w.begin() + i + 2, w.end());
                w = std::move(nw);
                rewritten = true;
            }
        }
        if (!rewritten) return w;
    }
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Word W(std::initializer_list<std::pair<int, int>> runs) { return Word(runs); }

constexpr int A = 0, B = 1, C = 2, D = 3;

// Sets every swap rule to plain commutation h*g = g*h.
void all_commute(Presentation& P) {
    for (int g = 1; g < P.ngens; ++g)
        for (int h = 0; h < g; ++h)
            P.swap_rhs[g][h] = W({{h, 1}, {g, 1}});
}

std::string gen_name(int g) { return std::string(1, static_cast<char>('a' + g)); }

std::string word_display(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [g, e] : w) {
        if (!first) os << "*";
        first = false;
        os << gen_name(g);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

void add_relation(Presentation& P, const Word& lhs, const Word& rhs) {
    P.relations.push_back({word_display(lhs) + " = " + word_display(rhs), lhs, rhs});
}

// Power relations g^n = rhs for every generator, from the caps and power
// words of the presentation.
void add_power_relations(Presentation& P, const std::array<int, 4>& true_order) {
    for (int g = 0; g < P.ngens; ++g)
        add_relation(P, W({{g, true_order[g]}}),
                     true_order[g] == P.cap[g] ? P.power_rhs[g] : Word{});
}

void require_odd_prime(const CatalogEntry& e) {
    if (e.p == 0)
        throw BadParameter(e.name + " requires parameter p (an odd prime)");
    if (!is_prime(e.p) || e.p == 2)
        throw BadParameter(e.name + ": p = " + std::to_string(e.p) + " is not an odd prime");
}

void require_no_p(const CatalogEntry& e) {
    if (e.p != 0)
        throw BadParameter(e.name + " takes no parameter p");
}

void require_no_d(const CatalogEntry& e) {
    if (e.d != 0)
        throw BadParameter(e.name + " takes no parameter d");
}

// Collection needs rule exponents inside the normal-form range, or words can
// grow without bound.  For a generator g whose power word is empty, g^cap is
// the identity, so reducing exponents mod cap is exact.  (Generators with a
// nontrivial power word -- Q8's b, H2's b, G7/G8's c at p=3 -- never appear
// with out-of-range exponents in the hand-written rules.)  Afterwards each
// swap word g h = W is split as W = L g R for the run-level rules; the shape
// (exactly one g, with exponent 1, lower letters before it) is enforced.
void normalize_rule_words(Presentation& P) {
    auto reduce = [&](Word& w) {
        Word out;
        for (auto [g, e] : w) {
            if (P.power_rhs[g].empty()) e %= P.cap[g];
            if (e != 0) out.emplace_back(g, e);
        }
        w = std::move(out);
    };
    for (int g = 0; g < P.ngens; ++g) {
        reduce(P.power_rhs[g]);
        for (int h = 0; h < g; ++h) reduce(P.swap_rhs[g][h]);
    }
    for (int g = 0; g < 4; ++g) {
        const Word& pw = P.power_rhs[g];
        if (pw.empty()) {
            P.true_order[g] = P.cap[g];
        } else if (pw.size() == 1 && P.power_rhs[pw[0].first].empty()) {
            // g^cap = x^m with x^cap[x] = 1, so ord(g) = cap * ord(x^m).
            const int cx = P.cap[pw[0].first];
            P.true_order[g] = P.cap[g] * (cx / std::gcd(cx, pw[0].second));
        } else {
            throw Error("power word must be a single run of a generator "
                        "whose own power word is empty");
        }
    }
    for (int g = 1; g < P.ngens; ++g)
        for (int h = 0; h < g; ++h) {
            const Word& w = P.swap_rhs[g][h];
            auto& rule = P.swap_rule[g][h];
            rule.L.clear();
            rule.R.clear();
            int seen_g = 0;
            for (auto [x, e] : w) {
                if (x == g) {
                    if (e != 1) throw Error("swap rule must contain the higher "
                                            "generator exactly once");
                    ++seen_g;
                } else if (seen_g == 0) {
                    if (x > g) throw Error("swap rule has a letter above the "
                                           "higher generator before it");
                    rule.L.emplace_back(x, e);
                } else {
                    rule.R.emplace_back(x, e);
                }
            }
            if (seen_g != 1)
                throw Error("swap rule must contain the higher generator exactly once");
            rule.run_level = true;
            for (auto [x, e] : rule.R)
                if (!P.central[x]) rule.run_level = false;
        }
}

Presentation presentation_for(const CatalogEntry& entry) {
    const std::string& n = entry.name;
    const int p = entry.p;
    Presentation P;

    if (n == "ScriptG1") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 2;
        P.cap = {p * p, p, 1, 1};
        all_commute(P);
        // a b = b a^(p+1)  =>  b a = a^((1-p) mod p^2) b
        P.swap_rhs[B][A] = W({{A, p * p - p + 1}, {B, 1}});
        add_power_relations(P, {p * p, p, 1, 1});
        add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, p + 1}}));
    } else if (n == "ScriptG2") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 3;
        P.cap = {p, p, p, 1};
        P.central[C] = true;
        all_commute(P);
        // a b = b a c, c central  =>  b a = a b c^(p-1)
        P.swap_rhs[B][A] = W({{A, 1}, {B, 1}, {C, p - 1}});
        add_power_relations(P, {p, p, p, 1});
        add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}, {C, 1}}));
        add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}}));
        add_relation(P, W({{B, 1}, {C, 1}}), W({{C, 1}, {B, 1}}));
    } else if (n == "G1") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 2;
        P.cap = {p * p * p, p, 1, 1};
        all_commute(P);
        P.swap_rhs[B][A] = W({{A, 1 + p * p}, {B, 1}});
        add_power_relations(P, {p * p * p, p, 1, 1});
        add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 1 + p * p}, {B, 1}}));
    } else if (n == "G2") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 3;
        P.cap = {p * p, p, p, 1};
        all_commute(P);
        P.swap_rhs[C][B] = W({{A, p}, {B, 1}, {C, 1}});
        add_power_relations(P, {p * p, p, p, 1});
        add_relation(P, W({{C, 1}, {B, 1}}), W({{A, p}, {B, 1}, {C, 1}}));
        add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}}));
        add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}}));
    } else if (n == "G3") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 2;
        P.cap = {p * p, p * p, 1, 1};
        all_commute(P);
        P.swap_rhs[B][A] = W({{A, 1 + p}, {B, 1}});
        add_power_relations(P, {p * p, p * p, 1, 1});
        add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 1 + p}, {B, 1}}));
    } else if (n == "G4" || n == "G5" || n == "G6") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 3;
        P.cap = {p * p, p, p, 1};
        all_commute(P);
        if (n == "G4") {
            P.swap_rhs[C][A] = W({{A, 1 + p}, {C, 1}});
            add_relation(P, W({{C, 1}, {A, 1}}), W({{A, 1 + p}, {C, 1}}));
            add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 1}, {B, 1}}));
            add_relation(P, W({{C, 1}, {B, 1}}), W({{B, 1}, {C, 1}}));
        } else if (n == "G5") {
            P.swap_rhs[C][A] = W({{A, 1}, {B, 1}, {C, 1}});
            add_relation(P, W({{C, 1}, {A, 1}}), W({{A, 1}, {B, 1}, {C, 1}}));
            add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}}));
            add_relation(P, W({{B, 1}, {C, 1}}), W({{C, 1}, {B, 1}}));
        } else {
            P.swap_rhs[B][A] = W({{A, 1 + p}, {B, 1}});
            P.swap_rhs[C][A] = W({{A, 1}, {B, 1}, {C, 1}});
            add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 1 + p}, {B, 1}}));
            add_relation(P, W({{C, 1}, {A, 1}}), W({{A, 1}, {B, 1}, {C, 1}}));
            add_relation(P, W({{C, 1}, {B, 1}}), W({{B, 1}, {C, 1}}));
        }
        add_power_relations(P, {p * p, p, p, 1});
    } else if (n == "G7" || n == "G8") {
        require_odd_prime(entry);
        int d = entry.d == 0 ? 2 : entry.d;
        if (n == "G7") require_no_d(entry);
        P.ngens = 3;
        P.cap = {p * p, p, p, 1};
        all_commute(P);
        if (p == 3) {
            if (n == "G8" && entry.d != 0)
                throw BadParameter("G8 takes parameter d only for p > 3");
            // a b = b a^(1+p)  =>  b a = a^((1-p) mod p^2) b = a^7 b
            P.swap_rhs[B][A] = W({{A, 7}, {B, 1}});
            // a c = c a b^(-1) together with c b = b c  =>  c a = a b c
            P.swap_rhs[C][A] = W({{A, 1}, {B, 1}, {C, 1}});
            // c^3 = a^3 (G7) or a^(-3) = a^6 (G8)
            P.power_rhs[C] = (n == "G7") ? W({{A, 3}}) : W({{A, 6}});
            add_relation(P, W({{A, 9}}), Word{});
            add_relation(P, W({{B, 3}}), Word{});
            add_relation(P, W({{C, 3}}), (n == "G7") ? W({{A, 3}}) : W({{A, -3}}));
            add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 4}}));
            add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}, {B, -1}}));
            add_relation(P, W({{C, 1}, {B, 1}}), W({{B, 1}, {C, 1}}));
        } else {
            if (n == "G8" && (d < 2 || d % p == 0 || d % p == 1))
                throw BadParameter("G8: d = " + std::to_string(d) +
                                   " must be >= 2 and not 0 or 1 mod p");
            const int e = (n == "G7") ? 1 : d;
            P.swap_rhs[B][A] = W({{A, 1 + p}, {B, 1}});
            P.swap_rhs[C][A] = W({{A, 1 + e * p}, {B, 1}, {C, 1}});
            P.swap_rhs[C][B] = (n == "G7") ? W({{A, p}, {B, 1}, {C, 1}})
                                           : W({{A, d * p}, {B, 1}, {C, 1}});
            add_power_relations(P, {p * p, p, p, 1});
            add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 1 + p}, {B, 1}}));
            add_relation(P, W({{C, 1}, {A, 1}}), W({{A, 1 + e * p}, {B, 1}, {C, 1}}));
            add_relation(P, W({{C, 1}, {B, 1}}),
                         (n == "G7") ? W({{A, p}, {B, 1}, {C, 1}})
                                     : W({{A, d * p}, {B, 1}, {C, 1}}));
        }
    } else if (n == "G9") {
        require_odd_prime(entry);
        require_no_d(entry);
        P.ngens = 4;
        P.cap = {p, p, p, p};
        all_commute(P);
        P.swap_rhs[D][C] = W({{A, 1}, {C, 1}, {D, 1}});
        add_power_relations(P, {p, p, p, p});
        add_relation(P, W({{D, 1}, {C, 1}}), W({{A, 1}, {C, 1}, {D, 1}}));
        add_relation(P, W({{B, 1}, {D, 1}}), W({{D, 1}, {B, 1}}));
        add_relation(P, W({{A, 1}, {D, 1}}), W({{D, 1}, {A, 1}}));
        add_relation(P, W({{B, 1}, {C, 1}}), W({{C, 1}, {B, 1}}));
        add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}}));
        add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}}));
    } else if (n == "G10") {
        require_odd_prime(entry);
        require_no_d(entry);
        if (p == 3) {
            P.ngens = 3;
            P.cap = {9, 3, 3, 1};
            all_commute(P);
            // a c = c a b together with b c = c a^(-3) b give the inverse
            // conjugation rules c a = a^7 b^2 c and c b = a^3 b c.
            P.swap_rhs[C][A] = W({{A, 7}, {B, 2}, {C, 1}});
            P.swap_rhs[C][B] = W({{A, 3}, {B, 1}, {C, 1}});
            add_power_relations(P, {9, 3, 3, 1});
            add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}}));
            add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}, {B, 1}}));
            add_relation(P, W({{B, 1}, {C, 1}}), W({{C, 1}, {A, -3}, {B, 1}}));
        } else {
            P.ngens = 4;
            P.cap = {p, p, p, p};
            all_commute(P);
            P.swap_rhs[D][C] = W({{B, 1}, {C, 1}, {D, 1}});
            P.swap_rhs[D][B] = W({{A, 1}, {B, 1}, {D, 1}});
            add_power_relations(P, {p, p, p, p});
            add_relation(P, W({{D, 1}, {C, 1}}), W({{B, 1}, {C, 1}, {D, 1}}));
            add_relation(P, W({{D, 1}, {B, 1}}), W({{A, 1}, {B, 1}, {D, 1}}));
            add_relation(P, W({{A, 1}, {D, 1}}), W({{D, 1}, {A, 1}}));
            add_relation(P, W({{B, 1}, {C, 1}}), W({{C, 1}, {B, 1}}));
            add_relation(P, W({{A, 1}, {C, 1}}), W({{C, 1}, {A, 1}}));
            add_relation(P, W({{A, 1}, {B, 1}}), W({{B, 1}, {A, 1}}));
        }
    } else if (n == "H1" || n == "H2") {
        require_no_p(entry);
        require_no_d(entry);
        P.ngens = 2;
        P.cap = {8, 2, 1, 1};
        all_commute(P);
        P.swap_rhs[B][A] = W({{A, 7}, {B, 1}});
        if (n == "H2") P.power_rhs[B] = W({{A, 4}});
        add_relation(P, W({{A, 8}}), Word{});
        add_relation(P, n == "H1" ? W({{B, 2}}) : W({{B, 4}}), Word{});
        add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 7}, {B, 1}}));
        if (n == "H2") add_relation(P, W({{A, 4}}), W({{B, 2}}));
    } else if (n == "D4" || n == "Q8") {
        require_no_p(entry);
        require_no_d(entry);
        P.ngens = 2;
        P.cap = {4, 2, 1, 1};
        all_commute(P);
        P.swap_rhs[B][A] = W({{A, 3}, {B, 1}});
        if (n == "Q8") P.power_rhs[B] = W({{A, 2}});
        add_relation(P, W({{A, 4}}), Word{});
        add_relation(P, W({{B, 2}}), n == "Q8" ? W({{A, 2}}) : Word{});
        add_relation(P, W({{B, 1}, {A, 1}}), W({{A, 3}, {B, 1}}));
    } else if (n == "AbelianP") {
        require_no_d(entry);
        if (entry.invariants.empty())
            throw BadParameter("AbelianP requires an invariant list, e.g. AbelianP:9,3");
        if (entry.invariants.size() > 4)
            throw BadParameter("AbelianP supports at most 4 invariants");
        // All invariants must be powers of one common prime.
        int q = entry.invariants[0];
        int prime = 0;
        for (int cand = 2; cand <= q; ++cand)
            if (is_prime(cand) && q % cand == 0) { prime = cand; break; }
        long long order = 1;
        for (int inv : entry.invariants) {
            int v = inv;
            if (v < 2) throw BadParameter("AbelianP: invariants must be >= 2");
            while (v % prime == 0) v /= prime;
            if (v != 1)
                throw BadParameter("AbelianP: invariants must be powers of one prime");
            order *= inv;
        }
        if (entry.p != 0 && entry.p != prime)
            throw BadParameter("AbelianP: p contradicts the invariant list");
        if (order > 2048)
            throw BadParameter("AbelianP: order exceeds 2048");
        P.ngens = static_cast<int>(entry.invariants.size());
        for (int g = 0; g < P.ngens; ++g) P.cap[g] = entry.invariants[g];
        for (int g = P.ngens; g < 4; ++g) P.cap[g] = 1;
        all_commute(P);
        std::array<int, 4> orders{1, 1, 1, 1};
        for (int g = 0; g < P.ngens; ++g) orders[g] = entry.invariants[g];
        add_power_relations(P, orders);
        for (int g = 1; g < P.ngens; ++g)
            for (int h = 0; h < g; ++h)
                add_relation(P, W({{g, 1}, {h, 1}}), W({{h, 1}, {g, 1}}));
    } else {
        throw BadParameter("unknown catalog name: " + n);
    }
    normalize_rule_words(P);
    return P;
}

struct BuiltGroup {
    FiniteGroup group;
    Presentation pres;
};

int word_to_index(const Presentation& P, const Word& w) {
    std::array<int, 4> e{0, 0, 0, 0};
    for (auto [g, x] : w) e[g] = x;
    int idx = 0;
    for (int g = 0; g < P.ngens; ++g) idx = idx * P.cap[g] + e[g];
    return idx;
}

Word index_to_word(const Presentation& P, int idx) {
    std::array<int, 4> e{0, 0, 0, 0};
    for (int g = P.ngens - 1; g >= 0; --g) {
        e[g] = idx % P.cap[g];
        idx /= P.cap[g];
    }
    Word w;
    for (int g = 0; g < P.ngens; ++g)
        if (e[g] > 0) w.emplace_back(g, e[g]);
    return w;
}

BuiltGroup build_impl(const CatalogEntry& entry) {
    Presentation P = presentation_for(entry);
    long long order = 1;
    for (int g = 0; g < P.ngens; ++g) order *= P.cap[g];
    const int n = static_cast<int>(order);

    // Left-multiplication map by each single generator, then the full table
    // by peeling the first generator of the left factor.  A single prepended
    // generator crosses the normal-form word once, so these n*ngens collects
    // stay cheap even when trailing-letter products would cascade.
    std::vector<std::vector<int>> left(P.ngens, std::vector<int>(n));
    for (int g = 0; g < P.ngens; ++g)
        for (int x = 0; x < n; ++x) {
            Word w;
            w.emplace_back(g, 1);
            Word wx = index_to_word(P, x);
            w.insert(w.end(), wx.begin(), wx.end());
            left[g][x] = word_to_index(P, collect(P, std::move(w)));
        }

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int y = 0; y < n; ++y) table[0][y] = y;
    for (int x = 1; x < n; ++x) {
        // Find x's first nonzero generator exponent; x = g * pred.
        Word wx = index_to_word(P, x);
        auto [g, e] = wx.front();
        if (e == 1) wx.erase(wx.begin());
        else wx.front().second = e - 1;
        const int pred = word_to_index(P, wx);
        for (int y = 0; y < n; ++y) table[x][y] = left[g][table[pred][y]];
    }

    FiniteGroup G = from_cayley_table(table);
    G.labels.resize(n);
    for (int x = 0; x < n; ++x) G.labels[x] = word_display(index_to_word(P, x));
    for (int g = 0; g < P.ngens; ++g)
        G.generators.push_back(word_to_index(P, W({{g, 1}})));
    return {std::move(G), std::move(P)};
}

int evaluate_word(const FiniteGroup& G, const std::vector<int>& gens, const Word& w) {
    int acc = G.identity;
    for (auto [g, e] : w) acc = G.mul(acc, G.power(gens[g], e));
    return acc;
}

} // namespace

FiniteGroup build(const CatalogEntry& entry) {
    BuiltGroup bg = build_impl(entry);
    for (const auto& rel : bg.pres.relations) {
        if (evaluate_word(bg.group, bg.group.generators, rel.lhs) !=
            evaluate_word(bg.group, bg.group.generators, rel.rhs))
            throw NotAGroup(entry.name + ": defining relation fails: " + rel.display);
    }
    return std::move(bg.group);
}

std::vector<std::pair<std::string, bool>> relation_audit(const CatalogEntry& entry) {
    BuiltGroup bg = build_impl(entry);
    std::vector<std::pair<std::string, bool>> report;
    for (const auto& rel : bg.pres.relations)
        report.emplace_back(rel.display,
                            evaluate_word(bg.group, bg.group.generators, rel.lhs) ==
                                evaluate_word(bg.group, bg.group.generators, rel.rhs));
    return report;
}

std::vector<CatalogDescriptor> list_catalog() {
    std::vector<CatalogDescriptor> list;
    list.push_back({"ScriptG1", "p odd prime", "order p^3"});
    list.push_back({"ScriptG2", "p odd prime", "order p^3, extraspecial"});
    list.push_back({"G1", "p odd prime", "order p^4"});
    list.push_back({"G2", "p odd prime", "order p^4"});
    list.push_back({"G3", "p odd prime", "order p^4"});
    list.push_back({"G4", "p odd prime", "order p^4"});
    list.push_back({"G5", "p odd prime", "order p^4"});
    list.push_back({"G6", "p odd prime", "order p^4"});
    list.push_back({"G7", "p odd prime", "order p^4; p=3 presentation differs"});
    list.push_back({"G8", "p odd prime; d (p>3, d % p not 0/1, default 2)",
                    "order p^4; p=3 presentation differs"});
    list.push_back({"G9", "p odd prime", "order p^4"});
    list.push_back({"G10", "p odd prime", "order p^4; p=3 presentation differs"});
    list.push_back({"H1", "none", "order 16"});
    list.push_back({"H2", "none", "order 16"});
    list.push_back({"D4", "none", "dihedral, order 8"});
    list.push_back({"Q8", "none", "quaternion, order 8"});
    list.push_back({"AbelianP", "invariant list, e.g. AbelianP:9,3",
                    "abelian p-group with the given cyclic invariants"});
    return list;
}

CatalogEntry parse_group_name(const std::string& name, int p, int d) {
    CatalogEntry entry;
    entry.p = p;
    entry.d = d;
    auto colon = name.find(':');
    if (colon == std::string::npos) {
        entry.name = name;
    } else {
        entry.name = name.substr(0, colon);
        if (entry.name != "AbelianP")
            throw BadParameter(entry.name + " does not take a ':' parameter list");
        std::string rest = name.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                entry.invariants.push_back(v);
            } catch (const std::exception&) {
                throw BadParameter("AbelianP: bad invariant '" + tok + "'");
            }
        }
        if (entry.invariants.empty())
            throw BadParameter("AbelianP: empty invariant list");
    }
    bool known = false;
    for (const auto& descr : list_catalog())
        if (descr.name == entry.name) known = true;
    if (!known) throw BadParameter("unknown catalog name: " + entry.name);
    return entry;
}

} // namespace zcu

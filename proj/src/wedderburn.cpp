#include "zcu/wedderburn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace zcu {

namespace {

// The left cosets of H in N in canonical order (identity coset first, then
// by least new member), each with its conjugation residue: coset nH maps to
// the j with n^-1 g n in g^j K.  The residue is well defined on cosets
// because H/K is abelian.
struct Cosets {
    std::vector<int> reps;
    std::vector<int> residues;
};

Cosets coset_residues(const ShodaPairRecord& rec) {
    const FiniteGroup& G = *rec.H.parent;
    Cosets cs;
    std::vector<char> seen(static_cast<size_t>(G.order), 0);
    auto add_coset = [&](int n) {
        cs.reps.push_back(n);
        for (int h : rec.H.members) seen[static_cast<size_t>(G.mul(n, h))] = 1;
        int y = G.mul(G.inv[n], G.mul(rec.g, n));
        auto it = rec.coset_exponent.find(y);
        if (it == rec.coset_exponent.end()) {
            throw ActionNotFaithful(
                "conjugation by a normalizer element moves the generator out of H; "
                "the record does not describe a valid pair");
        }
        cs.residues.push_back(it->second);
    };
    add_coset(G.identity);
    for (int n : rec.N.members) {
        if (!seen[static_cast<size_t>(n)]) add_coset(n);
    }
    return cs;
}

int coset_with_residue(const Cosets& cs, int r) {
    for (size_t i = 0; i < cs.residues.size(); ++i) {
        if (cs.residues[i] == r) return static_cast<int>(i);
    }
    throw BadParameter("no coset realizes the requested residue");
}

} // namespace

ActionImage action_image(const ShodaPairRecord& rec) {
    if (rec.H.parent == nullptr) throw BadParameter("record has no parent group");
    Cosets cs = coset_residues(rec);
    const int index = static_cast<int>(cs.reps.size());

    ActionImage img;
    img.q = rec.q;
    img.order = index;

    std::set<int> rset(cs.residues.begin(), cs.residues.end());
    if (static_cast<int>(rset.size()) != index) {
        throw ActionNotFaithful("the conjugation action of N/H on H/K identifies distinct cosets");
    }
    if (rec.q > 1) {
        for (int r : rset) {
            if (std::gcd(r, rec.q) != 1) {
                throw ActionNotFaithful("a conjugation residue is not a unit mod [H:K]");
            }
        }
    }
    img.residues.assign(rset.begin(), rset.end());

    if (index > 1) {
        // The residues of a valid record already form a subgroup; verify.
        std::vector<long long> all64(img.residues.begin(), img.residues.end());
        if (static_cast<int>(residue_subgroup(rec.q, all64).size()) != index) {
            throw ActionNotFaithful("the conjugation residues do not close under multiplication");
        }
        // Greedy generating set over the cosets in canonical order.
        std::vector<long long> chosen;
        std::vector<long long> closed = {1};
        for (size_t i = 1; i < cs.reps.size(); ++i) {
            long long r = cs.residues[i];
            if (std::binary_search(closed.begin(), closed.end(), r)) continue;
            chosen.push_back(r);
            img.gens.push_back(cs.residues[i]);
            img.gen_reps.push_back(cs.reps[i]);
            closed = residue_subgroup(rec.q, chosen);
            if (static_cast<int>(closed.size()) == index) break;
        }
    }

    if (index == 1) {
        img.structure = ActionStructure::trivial_action;
        img.structure_r = 0;
    } else {
        int generator = -1;
        for (int r : img.residues) {
            if (multiplicative_order(r, rec.q) == index) {
                generator = r;
                break;
            }
        }
        if (generator != -1) {
            img.structure = ActionStructure::cyclic;
            img.structure_r = generator;
        } else {
            const int minus = rec.q - 1;
            bool has_minus = std::binary_search(img.residues.begin(), img.residues.end(), minus);
            int found = -1;
            for (int r : img.residues) {
                if (multiplicative_order(r, rec.q) * 2 != index) continue;
                auto powers = residue_subgroup(rec.q, {r});
                if (!std::binary_search(powers.begin(), powers.end(),
                                        static_cast<long long>(minus))) {
                    found = r;
                    break;
                }
            }
            if (!has_minus || found == -1) {
                throw BadParameter(
                    "the action image is neither cyclic nor of the form <r> x <-1>");
            }
            img.structure = ActionStructure::cyclic_times_minus_one;
            img.structure_r = found;
        }
    }
    return img;
}

FixedFieldDescriptor fixed_field(const ActionImage& img) {
    FixedFieldDescriptor f;
    f.q = img.q;
    f.subgroup = img.residues;
    f.degree = static_cast<int>(euler_phi(img.q) / static_cast<long long>(img.residues.size()));
    auto units = unit_group_mod(img.q);
    for (int qp = 1; qp <= img.q; ++qp) {
        if (img.q % qp != 0) continue;
        std::vector<int> kernel;
        for (long long u : units) {
            if (u % qp == 1 % qp) kernel.push_back(static_cast<int>(u));
        }
        if (kernel == f.subgroup) {
            f.recognized = qp;
            break;
        }
    }
    return f;
}

std::vector<int> i_set(const ShodaPairRecord& rec) {
    if (rec.q <= 2) return {1};
    ActionImage img = action_image(rec);
    std::vector<long long> gens(img.residues.begin(), img.residues.end());
    gens.push_back(rec.q - 1);
    std::vector<long long> M = residue_subgroup(rec.q, gens);

    std::set<int> covered;  // least member of each coset already represented
    std::vector<int> reps;
    for (int k = 1; 2 * k <= rec.q; ++k) {
        if (std::gcd(k, rec.q) != 1) continue;
        int least = rec.q;
        for (long long m : M) {
            least = std::min(least, static_cast<int>((k * m) % rec.q));
        }
        if (covered.insert(least).second) reps.push_back(k);
    }
    return reps;
}

long long rank_central_units(const SspFamily& fam) {
    if (!fam.complete) {
        throw IncompleteFamily(
            "the pair family does not span the rational group algebra; "
            "the rank formula needs a complete family");
    }
    long long rank = 0;
    for (const auto& rec : fam.records) {
        rank += static_cast<long long>(i_set(rec).size()) - 1;
    }
    return rank;
}

ComponentDescriptor component(const ShodaPairRecord& rec) {
    const FiniteGroup& G = *rec.H.parent;
    ComponentDescriptor c;
    c.outer_degree = rec.m;
    c.q = rec.q;
    c.action = action_image(rec);

    Cosets cs = coset_residues(rec);
    const int k = static_cast<int>(cs.reps.size());

    std::vector<int> coset_id(static_cast<size_t>(G.order), -1);
    for (int i = 0; i < k; ++i) {
        for (int h : rec.H.members) {
            coset_id[static_cast<size_t>(G.mul(cs.reps[i], h))] = i;
        }
    }
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            int z = G.mul(cs.reps[x], cs.reps[y]);
            int target = coset_id[static_cast<size_t>(z)];
            int w = G.mul(G.inv[cs.reps[target]], z);
            c.cocycle[{cs.residues[x], cs.residues[y]}] = rec.coset_exponent.at(w);
        }
    }

    // Trivialization by preimage search.  A success exhibits coset
    // representatives whose products stay in K, so the twisted product is a
    // plain matrix ring over the fixed field of the action.
    auto coset_members = [&](int idx) {
        std::vector<int> v;
        v.reserve(rec.H.members.size());
        for (int h : rec.H.members) v.push_back(G.mul(cs.reps[idx], h));
        std::sort(v.begin(), v.end());
        return v;
    };
    bool trivialized = false;
    switch (c.action.structure) {
        case ActionStructure::trivial_action:
            trivialized = true;
            break;
        case ActionStructure::cyclic: {
            const int m = c.action.order;
            for (int n : coset_members(coset_with_residue(cs, c.action.structure_r))) {
                if (rec.K.contains(G.power(n, m))) {
                    trivialized = true;
                    break;
                }
            }
            break;
        }
        case ActionStructure::cyclic_times_minus_one: {
            const int m1 = static_cast<int>(multiplicative_order(c.action.structure_r, rec.q));
            auto first = coset_members(coset_with_residue(cs, c.action.structure_r));
            auto second = coset_members(coset_with_residue(cs, rec.q - 1));
            for (int n1 : first) {
                if (!rec.K.contains(G.power(n1, m1))) continue;
                for (int n2 : second) {
                    if (!rec.K.contains(G.mul(n2, n2))) continue;
                    int comm = G.mul(G.mul(G.inv[n1], G.inv[n2]), G.mul(n1, n2));
                    if (rec.K.contains(comm)) {
                        trivialized = true;
                        break;
                    }
                }
                if (trivialized) break;
            }
            break;
        }
    }
    if (trivialized) {
        c.simplified = {c.outer_degree * c.action.order, fixed_field(c.action)};
    }
    return c;
}

long long component_dimension(const ComponentDescriptor& comp) {
    return static_cast<long long>(comp.outer_degree) * comp.outer_degree *
           comp.action.order * euler_phi(comp.q);
}

std::vector<ComponentDescriptor> decomposition(const SspFamily& fam) {
    if (!fam.complete) {
        throw IncompleteFamily(
            "the pair family does not span the rational group algebra; "
            "no full decomposition is available");
    }
    std::vector<ComponentDescriptor> out;
    out.reserve(fam.records.size());
    long long total = 0;
    for (size_t i = 0; i < fam.records.size(); ++i) {
        ComponentDescriptor c = component(fam.records[i]);
        c.ssp_index = static_cast<int>(i);
        total += component_dimension(c);
        out.push_back(std::move(c));
    }
    if (total != fam.group->order) {
        throw DimensionMismatch("component dimensions sum to " + std::to_string(total) +
                                " but the group has order " + std::to_string(fam.group->order));
    }
    return out;
}

namespace {

std::string component_name(const ComponentDescriptor& c) {
    if (!c.simplified) {
        return "X(outer=" + std::to_string(c.outer_degree) + ",q=" + std::to_string(c.q) +
               ",m=" + std::to_string(c.action.order) + ")";
    }
    const auto& [n, f] = *c.simplified;
    std::string base;
    if (f.recognized && *f.recognized == 1) {
        base = "Q";
    } else if (f.recognized) {
        base = "Q(z" + std::to_string(*f.recognized) + ")";
    } else {
        base = "F(q=" + std::to_string(f.q) + ",deg=" + std::to_string(f.degree) + ")";
    }
    if (n == 1) return base;
    return "M" + std::to_string(n) + "(" + base + ")";
}

} // namespace

std::string decomposition_string(const std::vector<ComponentDescriptor>& comps) {
    std::vector<std::pair<std::pair<long long, std::string>, int>> sorted;
    for (const auto& c : comps) {
        sorted.push_back({{component_dimension(c), component_name(c)}, 1});
    }
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
        if (!out.empty()) out += " + ";
        out += sorted[i].first.second;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace zcu

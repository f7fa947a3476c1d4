#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zcu/group.hpp"

namespace zcu {

// A named group family from the built-in catalog.  Families and their
// parameter domains:
//   ScriptG1, ScriptG2          p odd prime, order p^3
//   G1 .. G10                   p odd prime, order p^4
//                               (G7/G8/G10 switch presentation at p = 3;
//                                G8 with p > 3 takes d with d % p not 0 or 1,
//                                default d = 2)
//   H1, H2                      fixed groups of order 16
//   D4, Q8                      fixed groups of order 8
//   AbelianP                    abelian p-group from an invariant list of
//                               powers of one prime, e.g. {9, 3}
struct CatalogEntry {
    std::string name;
    int p = 0;                    // prime parameter; 0 = not supplied
    int d = 0;                    // G8 (p > 3) parameter; 0 = use default 2
    std::vector<int> invariants;  // AbelianP cyclic invariants
};

// One row of list_catalog(): the name, its parameter domain, and any note
// about presentation special cases.
struct CatalogDescriptor {
    std::string name;
    std::string parameters;
    std::string note;
};

// Builds the group as an explicit multiplication table over normal-form
// words a^i b^j c^k d^l.  The table passes the full from_cayley_table
// validation, every defining relation is re-checked by multiplication, and
// labels/generators are set ("a", "b", ...; identity labeled "1").
// Throws BadParameter for names or parameters outside the domain.
FiniteGroup build(const CatalogEntry& entry);

std::vector<CatalogDescriptor> list_catalog();

// Every defining relation of the entry's presentation together with its
// truth value in the built group.  build() itself refuses to return a group
// for which any of these is false, so all values are true for any group this
// library hands out; the report exists so callers can display the audit.
std::vector<std::pair<std::string, bool>> relation_audit(const CatalogEntry& entry);

// Parses a CLI/JSON group name into an entry.  Accepts the bare family
// names plus the "AbelianP:n1,n2,..." form that embeds the invariant list.
// p and d come from separate flags; pass 0 when absent.
CatalogEntry parse_group_name(const std::string& name, int p, int d);

} // namespace zcu
